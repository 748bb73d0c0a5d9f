// Dense square matrices over the Laurent ring, plus the denominator-carrying
// form used for the Omega matrices.  Entries are addressed 0-based.

#ifndef GASSNER_MATRIX_HPP
#define GASSNER_MATRIX_HPP

#include <array>
#include <string>
#include <vector>

#include "gassner/laurent.hpp"

namespace gassner {

class LaurentMatrix {
public:
    // zero matrix, dim x dim, entries over `vars` variables
    LaurentMatrix(int dim, int vars);

    static LaurentMatrix identity(int dim, int vars);

    int dim() const { return dim_; }
    int vars() const { return vars_; }

    const LaurentPoly& at(int r, int c) const { return e_[r * dim_ + c]; }
    LaurentPoly& at(int r, int c) { return e_[r * dim_ + c]; }

    bool operator==(const LaurentMatrix& rhs) const = default;

    friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
    friend LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b);

    // entrywise bar, then transpose
    LaurentMatrix bar_transpose() const;

    // scalar-by-matrix product
    LaurentMatrix scaled(const LaurentPoly& s) const;

    // In-place right multiplication by the identity matrix carrying the 2x2
    // block [[b00,b01],[b10,b11]] at rows/cols {r1,r2}; only columns r1 and
    // r2 of *this change.  Equivalent to *this = *this * B where B is the
    // embedded block matrix.
    void apply_block_right(int r1, int r2, const std::array<LaurentPoly, 4>& block);

    // true iff every column sums to 1 (the all-ones row vector is fixed)
    bool ones_fixed() const;

    // cofactor expansion; guarded to dim <= 8
    LaurentPoly det() const;

    // multi-line human-readable form
    std::string str() const;

private:
    int dim_;
    int vars_;
    std::vector<LaurentPoly> e_;  // row-major
};

// numerator / denominator without reduction to lowest terms
struct ScaledMatrix {
    LaurentMatrix numerator;
    LaurentPoly denominator;

    ScaledMatrix(LaurentMatrix num, LaurentPoly den);
};

// exact equality of the represented fractions, by cross-multiplication
bool scaled_equals(const ScaledMatrix& a, const ScaledMatrix& b);

}  // namespace gassner

#endif
