#include "gassner/numeric.hpp"

#include <cmath>
#include <stdexcept>

#include "gassner/gassner.hpp"

namespace gassner {

namespace {

constexpr double kPoleGuard = 1e-9;

}  // namespace

std::vector<Complex> TorusPoint::values() const {
    std::vector<Complex> v;
    v.reserve(thetas.size());
    for (double th : thetas) v.push_back(std::polar(1.0, th));
    return v;
}

ComplexMatrix::ComplexMatrix(int dim)
    : dim_(dim), e_(static_cast<size_t>(dim) * dim, Complex(0.0, 0.0)) {
    if (dim < 1) throw std::invalid_argument("matrix dimension must be >= 1");
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r.at(j, i) = std::conj(at(i, j));
    return r;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
    ComplexMatrix r(a.dim_);
    for (int i = 0; i < a.dim_; ++i)
        for (int k = 0; k < a.dim_; ++k) {
            const Complex aik = a.at(i, k);
            if (aik == Complex(0.0, 0.0)) continue;
            for (int j = 0; j < a.dim_; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
    ComplexMatrix r(a.dim_);
    for (int i = 0; i < a.dim_; ++i)
        for (int j = 0; j < a.dim_; ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
    return r;
}

double frobenius_norm(const ComplexMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) s += std::norm(m.at(i, j));
    return std::sqrt(s);
}

double hermitian_deviation(const ComplexMatrix& h) {
    double dev = 0.0;
    for (int i = 0; i < h.dim(); ++i)
        for (int j = 0; j < h.dim(); ++j)
            dev = std::max(dev, std::abs(h.at(i, j) - std::conj(h.at(j, i))));
    return dev;
}

ComplexMatrix eval_matrix(const LaurentMatrix& m, const TorusPoint& p) {
    if (p.size() != m.vars())
        throw std::invalid_argument("torus point size must equal variable count");
    const std::vector<Complex> point = p.values();
    ComplexMatrix r(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) r.at(i, j) = m.at(i, j).eval(point);
    return r;
}

ComplexMatrix omega_numeric(const TorusPoint& p) {
    const int n = p.size();
    const std::vector<Complex> t = p.values();
    ComplexMatrix omega(n);
    for (int i = 0; i < n; ++i) {
        const Complex denom = Complex(1.0, 0.0) - t[i];
        if (std::abs(denom) < kPoleGuard)
            throw std::domain_error("theta_" + std::to_string(i + 1) +
                                    " too close to a pole of Omega (t = 1)");
        omega.at(i, i) = 1.0 / denom;
        for (int j = 0; j < i; ++j) omega.at(i, j) = 1.0;
    }
    return omega;
}

ComplexMatrix psi_numeric(const TorusPoint& p) {
    const ComplexMatrix omega = omega_numeric(p);
    const ComplexMatrix omega_h = omega.adjoint();
    ComplexMatrix psi(p.size());
    const Complex iunit(0.0, 1.0);
    for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < p.size(); ++j)
            psi.at(i, j) = iunit * (omega_h.at(i, j) - omega.at(i, j));
    return psi;
}

ComplexMatrix d_numeric(const TorusPoint& p) {
    const int n = p.size();
    const std::vector<Complex> t = p.values();
    ComplexMatrix d(n);
    for (int i = 0; i < n; ++i) d.at(i, i) = Complex(1.0, 0.0) - t[i];
    return d;
}

ComplexMatrix psi_prime_numeric(const TorusPoint& p) {
    const ComplexMatrix d = d_numeric(p);
    return d.adjoint() * psi_numeric(p) * d;
}

bool is_positive_definite(const ComplexMatrix& h, double tol) {
    if (hermitian_deviation(h) > std::max(tol, 1e-9))
        throw std::invalid_argument("input is not Hermitian within tolerance");
    const int n = h.dim();
    // factor the Hermitian part, L L^H, pivots on the diagonal
    ComplexMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a.at(i, j) = 0.5 * (h.at(i, j) + std::conj(h.at(j, i)));
    std::vector<std::vector<Complex>> l(n, std::vector<Complex>(n, Complex(0, 0)));
    for (int j = 0; j < n; ++j) {
        double pivot = a.at(j, j).real();
        for (int k = 0; k < j; ++k) pivot -= std::norm(l[j][k]);
        if (!(pivot > tol)) return false;
        const double root = std::sqrt(pivot);
        l[j][j] = root;
        for (int i = j + 1; i < n; ++i) {
            Complex s = a.at(i, j);
            for (int k = 0; k < j; ++k) s -= l[i][k] * std::conj(l[j][k]);
            l[i][j] = s / root;
        }
    }
    return true;
}

double form_unitarity_residual(const ComplexMatrix& gamma, const ComplexMatrix& form) {
    const ComplexMatrix lhs = gamma.adjoint() * form * gamma;
    return frobenius_norm(lhs - form) / frobenius_norm(form);
}

double psi_unitarity_residual(const BraidWord& b, const TorusPoint& p) {
    if (!is_pure(b))
        throw std::invalid_argument("unitarity residual requires a pure braid");
    if (p.size() != b.strands())
        throw std::invalid_argument("torus point size must equal strand count");
    return form_unitarity_residual(eval_matrix(gassner_matrix(b), p), psi_numeric(p));
}

double psi_prime_unitarity_residual(const BraidWord& b, const TorusPoint& p) {
    if (!is_pure(b))
        throw std::invalid_argument("unitarity residual requires a pure braid");
    if (p.size() != b.strands())
        throw std::invalid_argument("torus point size must equal strand count");
    const int n = p.size();
    const ComplexMatrix gamma = eval_matrix(gassner_matrix(b), p);
    const ComplexMatrix d = d_numeric(p);
    ComplexMatrix dinv(n);
    for (int i = 0; i < n; ++i) dinv.at(i, i) = 1.0 / d.at(i, i);
    return form_unitarity_residual(dinv * gamma * d, psi_prime_numeric(p));
}

}  // namespace gassner
