// Unit-torus specialization and the Hermitian forms Psi and Psi'.
//
// Sign convention: Psi is built as i * (conjugate-transpose(Omega) - Omega),
// whose diagonal entries equal 2*Im(1/(1-t_p)) = cot(theta_p/2).  These are
// real, positive and large for theta_p in (0, pi) close to 0, which is what
// makes the form positive definite there.

#ifndef GASSNER_NUMERIC_HPP
#define GASSNER_NUMERIC_HPP

#include <complex>
#include <vector>

#include "gassner/braid.hpp"
#include "gassner/matrix.hpp"

namespace gassner {

using Complex = std::complex<double>;

// t_p = exp(i * theta_p); every coordinate has unit modulus by construction
struct TorusPoint {
    std::vector<double> thetas;

    explicit TorusPoint(std::vector<double> t) : thetas(std::move(t)) {}
    int size() const { return static_cast<int>(thetas.size()); }
    std::vector<Complex> values() const;
};

class ComplexMatrix {
public:
    explicit ComplexMatrix(int dim);
    static ComplexMatrix identity(int dim);

    int dim() const { return dim_; }
    Complex& at(int r, int c) { return e_[r * dim_ + c]; }
    const Complex& at(int r, int c) const { return e_[r * dim_ + c]; }

    ComplexMatrix adjoint() const;  // conjugate transpose

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    int dim_;
    std::vector<Complex> e_;
};

double frobenius_norm(const ComplexMatrix& m);

// max entrywise |H(i,j) - conj(H(j,i))|
double hermitian_deviation(const ComplexMatrix& h);

// entrywise evaluation at the torus point (point size must match vars)
ComplexMatrix eval_matrix(const LaurentMatrix& m, const TorusPoint& p);

// Omega(identity) at the point: diagonal 1/(1-t_p), ones below, zeros above.
// Throws domain_error when some |1 - t_p| < 1e-9 (pole guard).
ComplexMatrix omega_numeric(const TorusPoint& p);

// Psi = i * (adjoint(Omega) - Omega); Hermitian to machine precision
ComplexMatrix psi_numeric(const TorusPoint& p);

// Psi' = adjoint(D) * Psi * D with D = diag(1 - t_p)
ComplexMatrix psi_prime_numeric(const TorusPoint& p);

ComplexMatrix d_numeric(const TorusPoint& p);

// Cholesky-style factorization of the Hermitian part; true iff every pivot
// exceeds tol.  Throws invalid_argument when the input is not Hermitian
// within tol (absolute, entrywise).
bool is_positive_definite(const ComplexMatrix& h, double tol = 1e-10);

// ||gamma* Psi gamma - Psi||_F / ||Psi||_F at the point; requires a pure braid
double psi_unitarity_residual(const BraidWord& b, const TorusPoint& p);

// Same residual for Psi' against the conjugated matrix D^-1 gamma D, the
// numeric image of the alternative form of the representation.
double psi_prime_unitarity_residual(const BraidWord& b, const TorusPoint& p);

// same residual for an arbitrary Hermitian form
double form_unitarity_residual(const ComplexMatrix& gamma, const ComplexMatrix& form);

}  // namespace gassner

#endif
