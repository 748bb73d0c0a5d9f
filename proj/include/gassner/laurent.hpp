// Sparse multivariate Laurent polynomials Z[t1^±1, ..., tn^±1].
//
// Values are immutable once built and safe to share across threads.
// Every operation validates that both operands live over the same
// variable count; there is no implicit broadcasting.

#ifndef GASSNER_LAURENT_HPP
#define GASSNER_LAURENT_HPP

#include <complex>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gassner {

using Coeff = mpz_class;

// Exponent of t_{i+1} sits at slot i; entries may be negative.
using ExponentVector = std::vector<int>;

// Canonical term order: slots compared left to right, each slot ordered
// 0 < 1 < -1 < 2 < -2 < ...  (constant term first, positive powers before
// their negative counterparts).  This is the order of the printed form and
// of map iteration, so equal polynomials always print identically.
struct ExponentOrder {
    static long slot_key(int e) { return e > 0 ? 2L * e - 1 : -2L * e; }

    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        const size_t m = a.size() < b.size() ? a.size() : b.size();
        for (size_t k = 0; k < m; ++k) {
            const long ka = slot_key(a[k]), kb = slot_key(b[k]);
            if (ka != kb) return ka < kb;
        }
        return a.size() < b.size();
    }
};

class LaurentPoly {
public:
    using TermMap = std::map<ExponentVector, Coeff, ExponentOrder>;

    // the zero polynomial over vars variables
    explicit LaurentPoly(int vars);

    static LaurentPoly zero(int vars) { return LaurentPoly(vars); }
    static LaurentPoly constant(int vars, Coeff c);
    static LaurentPoly one(int vars) { return constant(vars, 1); }
    // t_index, index is 1-based
    static LaurentPoly variable(int vars, int index);
    // c * t1^{e[0]} * ... * tn^{e[n-1]}
    static LaurentPoly monomial(int vars, ExponentVector exps, Coeff c);

    int vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const TermMap& terms() const { return terms_; }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    bool operator==(const LaurentPoly& rhs) const = default;

    // the involution t_i -> t_i^{-1}
    LaurentPoly bar() const;

    // substitute t_j -> t_{image[j-1]}; image is a permutation of 1..n
    LaurentPoly permute_vars(const std::vector<int>& image) const;

    // collapse every t_i to a single variable t (exponents added per term)
    LaurentPoly collapse_vars() const;

    // evaluate at a point with all coordinates nonzero
    std::complex<double> eval(std::span<const std::complex<double>> point) const;

    // canonical printed form, e.g. "1 - t1 + t1*t2^-1"; zero prints "0"
    std::string str() const;

private:
    void add_term(const ExponentVector& e, const Coeff& c);

    int vars_;
    TermMap terms_;  // invariant: no zero coefficients stored
};

// Delta = (1-t1)(1-t2)...(1-tn), the common denominator that clears Omega
LaurentPoly delta(int n);

}  // namespace gassner

#endif
