#include "gassner/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace gassner {

namespace {

void check_vars(int a, int b) {
    if (a != b)
        throw std::invalid_argument("variable count mismatch: " + std::to_string(a) +
                                    " vs " + std::to_string(b));
}

}  // namespace

LaurentPoly::LaurentPoly(int vars) : vars_(vars) {
    if (vars < 1) throw std::invalid_argument("variable count must be >= 1");
}

LaurentPoly LaurentPoly::constant(int vars, Coeff c) {
    LaurentPoly p(vars);
    if (c != 0) p.terms_.emplace(ExponentVector(vars, 0), std::move(c));
    return p;
}

LaurentPoly LaurentPoly::variable(int vars, int index) {
    if (index < 1 || index > vars)
        throw std::invalid_argument("variable index out of range");
    ExponentVector e(vars, 0);
    e[index - 1] = 1;
    return monomial(vars, std::move(e), 1);
}

LaurentPoly LaurentPoly::monomial(int vars, ExponentVector exps, Coeff c) {
    if (static_cast<int>(exps.size()) != vars)
        throw std::invalid_argument("exponent vector length must equal variable count");
    LaurentPoly p(vars);
    if (c != 0) p.terms_.emplace(std::move(exps), std::move(c));
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->second == 1 &&
           terms_.begin()->first == ExponentVector(vars_, 0);
}

void LaurentPoly::add_term(const ExponentVector& e, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    check_vars(vars_, rhs.vars_);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    check_vars(vars_, rhs.vars_);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    check_vars(a.vars_, b.vars_);
    LaurentPoly r(a.vars_);
    ExponentVector e(a.vars_);
    Coeff c;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int k = 0; k < a.vars_; ++k) e[k] = ea[k] + eb[k];
            c = ca * cb;
            r.add_term(e, c);
        }
    }
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r(vars_);
    ExponentVector e(vars_);
    for (const auto& [ea, c] : terms_) {
        for (int k = 0; k < vars_; ++k) e[k] = -ea[k];
        r.terms_.emplace(e, c);
    }
    return r;
}

LaurentPoly LaurentPoly::permute_vars(const std::vector<int>& image) const {
    if (static_cast<int>(image.size()) != vars_)
        throw std::invalid_argument("permutation size must equal variable count");
    LaurentPoly r(vars_);
    ExponentVector e(vars_);
    for (const auto& [ea, c] : terms_) {
        for (int k = 0; k < vars_; ++k) e[image[k] - 1] = ea[k];
        r.terms_.emplace(e, c);
    }
    return r;
}

LaurentPoly LaurentPoly::collapse_vars() const {
    LaurentPoly r(1);
    for (const auto& [ea, c] : terms_) {
        int total = 0;
        for (int k = 0; k < vars_; ++k) total += ea[k];
        r.add_term(ExponentVector{total}, c);
    }
    return r;
}

std::complex<double> LaurentPoly::eval(std::span<const std::complex<double>> point) const {
    if (static_cast<int>(point.size()) != vars_)
        throw std::invalid_argument("evaluation point size must equal variable count");
    for (const auto& z : point)
        if (z == std::complex<double>(0.0, 0.0))
            throw std::domain_error("evaluation at zero coordinate (negative exponents occur)");

    auto ipow = [](std::complex<double> z, int e) {
        if (e < 0) {
            z = 1.0 / z;
            e = -e;
        }
        std::complex<double> acc(1.0, 0.0);
        while (e > 0) {
            if (e & 1) acc *= z;
            z *= z;
            e >>= 1;
        }
        return acc;
    };

    std::complex<double> sum(0.0, 0.0);
    for (const auto& [e, c] : terms_) {
        std::complex<double> m(c.get_d(), 0.0);
        for (int k = 0; k < vars_; ++k)
            if (e[k] != 0) m *= ipow(point[k], e[k]);
        sum += m;
    }
    return sum;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool neg = c < 0;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        const Coeff mag = neg ? Coeff(-c) : c;

        std::string mono;
        for (int k = 0; k < vars_; ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "t" + std::to_string(k + 1);
            if (e[k] != 1) mono += "^" + std::to_string(e[k]);
        }
        if (mono.empty()) {
            out << mag.get_str();
        } else {
            if (mag != 1) out << mag.get_str() << "*";
            out << mono;
        }
    }
    return out.str();
}

LaurentPoly delta(int n) {
    if (n < 1) throw std::invalid_argument("delta requires n >= 1");
    LaurentPoly d = LaurentPoly::one(n);
    for (int i = 1; i <= n; ++i)
        d *= LaurentPoly::one(n) - LaurentPoly::variable(n, i);
    return d;
}

}  // namespace gassner
