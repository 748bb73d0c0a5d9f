#include "gassner/gassner.hpp"

#include <cctype>
#include <sstream>

namespace gassner {

namespace {

// 2x2 block of U_i(t_j) / its inverse, as {b00, b01, b10, b11}
std::array<LaurentPoly, 4> crossing_block(int n, int sign, int var_j) {
    const LaurentPoly one = LaurentPoly::one(n);
    const LaurentPoly zero = LaurentPoly::zero(n);
    const LaurentPoly t = LaurentPoly::variable(n, var_j);
    if (sign > 0) return {one - t, one, t, zero};
    const LaurentPoly tbar = t.bar();
    return {zero, tbar, one, one - tbar};
}

LaurentMatrix product_over_crossings(const BraidWord& b, const std::vector<int>& over) {
    const int n = b.strands();
    LaurentMatrix m = LaurentMatrix::identity(n, n);
    size_t alpha = 0;
    for (const auto& [pos, sign] : b.crossings()) {
        m.apply_block_right(pos - 1, pos, crossing_block(n, sign, over[alpha]));
        ++alpha;
    }
    return m;
}

std::optional<std::pair<int, int>> first_difference(const LaurentMatrix& a,
                                                    const LaurentMatrix& b) {
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (!(a.at(i, j) == b.at(i, j))) return std::make_pair(i, j);
    return std::nullopt;
}

}  // namespace

LaurentMatrix generator_matrix(int n, int i, int sign, int var_j) {
    if (i < 1 || i > n - 1) throw std::invalid_argument("generator position out of range");
    if (var_j < 1 || var_j > n) throw std::invalid_argument("variable index out of range");
    LaurentMatrix m = LaurentMatrix::identity(n, n);
    const auto block = crossing_block(n, sign, var_j);
    m.at(i - 1, i - 1) = block[0];
    m.at(i - 1, i) = block[1];
    m.at(i, i - 1) = block[2];
    m.at(i, i) = block[3];
    return m;
}

LaurentMatrix gassner_matrix(const BraidWord& b) {
    return product_over_crossings(b, annotate(b).over);
}

LaurentMatrix gassner_inverse(const BraidWord& b) {
    const BraidWord rev = invert_word(b);
    const Permutation tau = annotate(b).tau;
    return product_over_crossings(rev, annotate_from(rev, tau).over);
}

ScaledMatrix omega_cleared(const Permutation& tau) {
    const int n = tau.size();
    const LaurentPoly d = delta(n);
    LaurentMatrix num(n, n);
    for (int p = 1; p <= n; ++p) {
        LaurentPoly diag = LaurentPoly::one(n);
        for (int q = 1; q <= n; ++q)
            if (q != tau.image(p))
                diag *= LaurentPoly::one(n) - LaurentPoly::variable(n, q);
        num.at(p - 1, p - 1) = std::move(diag);
        for (int q = 1; q < p; ++q) num.at(p - 1, q - 1) = d;
    }
    return ScaledMatrix(std::move(num), d);
}

UnitarityReport verify_unitarity(const BraidWord& b) {
    const Permutation tau = annotate(b).tau;
    const int n = b.strands();
    LaurentMatrix lhs = omega_cleared(tau).numerator * gassner_inverse(b);
    LaurentMatrix rhs =
        gassner_matrix(b).bar_transpose() * omega_cleared(Permutation::identity(n)).numerator;
    auto diff = first_difference(lhs, rhs);
    return UnitarityReport{!diff.has_value(), std::move(lhs), std::move(rhs), diff};
}

bool verify_unitarity_variant(const BraidWord& b) {
    if (!is_pure(b))
        throw std::invalid_argument("variant unitarity check requires a pure braid");
    const int n = b.strands();
    const LaurentMatrix omega_bt =
        omega_cleared(Permutation::identity(n)).numerator.bar_transpose();
    const LaurentMatrix lhs = omega_bt * gassner_inverse(b);
    const LaurentMatrix rhs = gassner_matrix(b).bar_transpose() * omega_bt;
    return lhs == rhs;
}

LaurentMatrix relabel(const LaurentMatrix& m, const Permutation& sigma) {
    if (sigma.size() != m.vars())
        throw std::invalid_argument("permutation size must equal variable count");
    LaurentMatrix r(m.dim(), m.vars());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            r.at(i, j) = m.at(i, j).permute_vars(sigma.one_line());
    return r;
}

LaurentPoly det_from_word(const BraidWord& b) {
    const int n = b.strands();
    const AnnotatedBraid ab = annotate(b);
    ExponentVector e(n, 0);
    for (size_t alpha = 0; alpha < ab.over.size(); ++alpha)
        e[ab.over[alpha] - 1] += b.crossings()[alpha].sign;
    return LaurentPoly::monomial(n, std::move(e),
                                 b.length() % 2 == 0 ? Coeff(1) : Coeff(-1));
}

// --- v/w extension ------------------------------------------------------

VWWord::VWWord(int strands, std::vector<VWCrossing> crossings) : VWWord(strands) {
    for (const auto& c : crossings) push(c.i, c.j, c.sign);
}

void VWWord::push(int i, int j, int sign) {
    if (i < 1 || i > strands_ || j < 1 || j > strands_)
        throw std::invalid_argument("strand index out of range");
    if (i == j) throw std::invalid_argument("v/w crossing needs two distinct strands");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("crossing sign must be +1 or -1");
    crossings_.push_back({i, j, sign});
}

namespace {

std::array<LaurentPoly, 4> vw_block(int n, int i, int j, int sign, bool alt) {
    const LaurentPoly one = LaurentPoly::one(n);
    const LaurentPoly zero = LaurentPoly::zero(n);
    const LaurentPoly ti = LaurentPoly::variable(n, i);
    const LaurentPoly tj = LaurentPoly::variable(n, j);
    if (!alt) {
        if (sign > 0) return {one, one - ti, zero, ti};
        const LaurentPoly tibar = ti.bar();
        return {one, one - tibar, zero, tibar};
    }
    if (sign > 0) return {one, one - tj, zero, ti};
    // [[1, b],[0, d]]^-1 = [[1, -b/d],[0, 1/d]] with d = t_i
    const LaurentPoly tibar = ti.bar();
    return {one, -(tibar * (one - tj)), zero, tibar};
}

LaurentMatrix place_block(int n, int i, int j, const std::array<LaurentPoly, 4>& block) {
    LaurentMatrix m = LaurentMatrix::identity(n, n);
    m.at(i - 1, i - 1) = block[0];
    m.at(i - 1, j - 1) = block[1];
    m.at(j - 1, i - 1) = block[2];
    m.at(j - 1, j - 1) = block[3];
    return m;
}

LaurentMatrix vw_product(const VWWord& w, bool alt) {
    const int n = w.strands();
    LaurentMatrix m = LaurentMatrix::identity(n, n);
    for (const auto& [i, j, sign] : w.crossings())
        m.apply_block_right(i - 1, j - 1, vw_block(n, i, j, sign, alt));
    return m;
}

}  // namespace

LaurentMatrix vw_generator(int n, int i, int j, int sign) {
    if (i < 1 || i > n || j < 1 || j > n || i == j)
        throw std::invalid_argument("v/w generator indices out of range");
    return place_block(n, i, j, vw_block(n, i, j, sign, false));
}

LaurentMatrix vw_generator_alt(int n, int i, int j, int sign) {
    if (i < 1 || i > n || j < 1 || j > n || i == j)
        throw std::invalid_argument("v/w generator indices out of range");
    return place_block(n, i, j, vw_block(n, i, j, sign, true));
}

LaurentMatrix vw_gassner(const VWWord& w) { return vw_product(w, false); }

LaurentMatrix vw_gassner_prime(const VWWord& w) { return vw_product(w, true); }

VWWord vw_invert(const VWWord& w) {
    VWWord r(w.strands());
    for (auto it = w.crossings().rbegin(); it != w.crossings().rend(); ++it)
        r.push(it->i, it->j, -it->sign);
    return r;
}

UnitarityReport vw_verify_unitarity(const VWWord& w) {
    const int n = w.strands();
    const LaurentMatrix omega = omega_cleared(Permutation::identity(n)).numerator;
    LaurentMatrix lhs = omega * vw_gassner(vw_invert(w));
    LaurentMatrix rhs = vw_gassner(w).bar_transpose() * omega;
    auto diff = first_difference(lhs, rhs);
    return UnitarityReport{!diff.has_value(), std::move(lhs), std::move(rhs), diff};
}

VWWord vw_unitarity_witness() {
    return VWWord(3, {{1, 2, 1}, {2, 3, 1}});
}

LaurentMatrix d_matrix(int n) {
    LaurentMatrix m(n, n);
    for (int i = 1; i <= n; ++i)
        m.at(i - 1, i - 1) = LaurentPoly::one(n) - LaurentPoly::variable(n, i);
    return m;
}

LaurentMatrix burau_specialize(const LaurentMatrix& m) {
    LaurentMatrix r(m.dim(), 1);
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) r.at(i, j) = m.at(i, j).collapse_vars();
    return r;
}

VWWord parse_vw_word(const std::string& text, int strands) {
    VWWord w(strands);
    size_t i = 0;
    const size_t len = text.size();
    while (i < len) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        const size_t start = i;
        while (i < len && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::string tok = text.substr(start, i - start);

        int sign = 1;
        std::string body = tok;
        if (body[0] == '-') {
            sign = -1;
            body = body.substr(1);
        }
        const size_t comma = body.find(',');
        auto malformed = [&] {
            return ParseError("malformed v/w token '" + tok + "' at offset " +
                                  std::to_string(start) + " (expected i,j or -i,j)",
                              start, tok);
        };
        if (comma == std::string::npos) throw malformed();
        const std::string si = body.substr(0, comma);
        const std::string sj = body.substr(comma + 1);
        if (si.empty() || sj.empty() ||
            si.find_first_not_of("0123456789") != std::string::npos ||
            sj.find_first_not_of("0123456789") != std::string::npos)
            throw malformed();
        long a = std::stol(si), c = std::stol(sj);
        if (a < 1 || a > strands || c < 1 || c > strands || a == c)
            throw ParseError("v/w token '" + tok + "' needs distinct strands in 1.." +
                                 std::to_string(strands),
                             start, tok);
        w.push(static_cast<int>(a), static_cast<int>(c), sign);
    }
    return w;
}

std::string print_vw_word(const VWWord& w) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [i, j, sign] : w.crossings()) {
        if (!first) out << " ";
        if (sign < 0) out << "-";
        out << i << "," << j;
        first = false;
    }
    return out.str();
}

}  // namespace gassner
