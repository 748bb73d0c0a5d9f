#include "gassner/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace gassner {

LaurentMatrix::LaurentMatrix(int dim, int vars)
    : dim_(dim), vars_(vars), e_(static_cast<size_t>(dim) * dim, LaurentPoly(vars)) {
    if (dim < 1) throw std::invalid_argument("matrix dimension must be >= 1");
}

LaurentMatrix LaurentMatrix::identity(int dim, int vars) {
    LaurentMatrix m(dim, vars);
    for (int i = 0; i < dim; ++i) m.at(i, i) = LaurentPoly::one(vars);
    return m;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.dim_ != b.dim_)
        throw std::invalid_argument("matrix dimension mismatch");
    LaurentMatrix r(a.dim_, a.vars_);
    for (int i = 0; i < a.dim_; ++i)
        for (int k = 0; k < a.dim_; ++k) {
            const LaurentPoly& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < a.dim_; ++j) {
                const LaurentPoly& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.dim_ != b.dim_)
        throw std::invalid_argument("matrix dimension mismatch");
    LaurentMatrix r = a;
    for (int i = 0; i < a.dim_; ++i)
        for (int j = 0; j < a.dim_; ++j) r.at(i, j) += b.at(i, j);
    return r;
}

LaurentMatrix LaurentMatrix::bar_transpose() const {
    LaurentMatrix r(dim_, vars_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r.at(j, i) = at(i, j).bar();
    return r;
}

LaurentMatrix LaurentMatrix::scaled(const LaurentPoly& s) const {
    LaurentMatrix r(dim_, vars_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            if (!at(i, j).is_zero()) r.at(i, j) = at(i, j) * s;
    return r;
}

void LaurentMatrix::apply_block_right(int r1, int r2,
                                      const std::array<LaurentPoly, 4>& block) {
    if (r1 < 0 || r2 < 0 || r1 >= dim_ || r2 >= dim_ || r1 == r2)
        throw std::invalid_argument("block rows out of range");
    for (int i = 0; i < dim_; ++i) {
        LaurentPoly c1 = at(i, r1) * block[0] + at(i, r2) * block[2];
        LaurentPoly c2 = at(i, r1) * block[1] + at(i, r2) * block[3];
        at(i, r1) = std::move(c1);
        at(i, r2) = std::move(c2);
    }
}

bool LaurentMatrix::ones_fixed() const {
    const LaurentPoly one = LaurentPoly::one(vars_);
    for (int j = 0; j < dim_; ++j) {
        LaurentPoly sum(vars_);
        for (int i = 0; i < dim_; ++i) sum += at(i, j);
        if (!(sum == one)) return false;
    }
    return true;
}

namespace {

LaurentPoly det_rec(const LaurentMatrix& m, std::vector<int>& rows, int col_from) {
    const int k = static_cast<int>(rows.size());
    if (k == 1) return m.at(rows[0], col_from);
    LaurentPoly sum(m.vars());
    for (int p = 0; p < k; ++p) {
        const LaurentPoly& pivot = m.at(rows[p], col_from);
        if (pivot.is_zero()) continue;
        const int saved = rows[p];
        rows.erase(rows.begin() + p);
        LaurentPoly minor = det_rec(m, rows, col_from + 1);
        rows.insert(rows.begin() + p, saved);
        LaurentPoly term = pivot * minor;
        if (p % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

}  // namespace

LaurentPoly LaurentMatrix::det() const {
    if (dim_ > 8)
        throw std::invalid_argument("determinant supported for dimension <= 8");
    std::vector<int> rows(dim_);
    for (int i = 0; i < dim_; ++i) rows[i] = i;
    return det_rec(*this, rows, 0);
}

std::string LaurentMatrix::str() const {
    std::ostringstream out;
    for (int i = 0; i < dim_; ++i) {
        out << "[ ";
        for (int j = 0; j < dim_; ++j) {
            if (j) out << ", ";
            out << at(i, j).str();
        }
        out << " ]\n";
    }
    return out.str();
}

ScaledMatrix::ScaledMatrix(LaurentMatrix num, LaurentPoly den)
    : numerator(std::move(num)), denominator(std::move(den)) {
    if (denominator.is_zero())
        throw std::invalid_argument("scaled matrix denominator must be nonzero");
}

bool scaled_equals(const ScaledMatrix& a, const ScaledMatrix& b) {
    if (a.numerator.dim() != b.numerator.dim())
        throw std::invalid_argument("matrix dimension mismatch");
    return a.numerator.scaled(b.denominator) == b.numerator.scaled(a.denominator);
}

}  // namespace gassner
