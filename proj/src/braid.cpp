#include "gassner/braid.hpp"

#include <cctype>
#include <random>
#include <sstream>

namespace gassner {

BraidWord::BraidWord(int strands, std::vector<Crossing> crossings) : BraidWord(strands) {
    for (const auto& c : crossings) push(c.pos, c.sign);
}

void BraidWord::push(int pos, int sign) {
    if (pos < 1 || pos >= strands_)
        throw std::invalid_argument("crossing position " + std::to_string(pos) +
                                    " out of range 1.." + std::to_string(strands_ - 1));
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("crossing sign must be +1 or -1");
    crossings_.push_back({pos, sign});
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    for (int p = 1; p <= n; ++p) img[p - 1] = p;
    return Permutation(std::move(img));
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    const int n = static_cast<int>(image_.size());
    if (n < 1) throw std::invalid_argument("permutation must be nonempty");
    std::vector<bool> seen(n, false);
    for (int v : image_) {
        if (v < 1 || v > n || seen[v - 1])
            throw std::invalid_argument("not a permutation of 1..n");
        seen[v - 1] = true;
    }
}

bool Permutation::is_identity() const {
    for (int p = 1; p <= size(); ++p)
        if (image(p) != p) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(image_.size());
    for (int p = 1; p <= size(); ++p) inv[image(p) - 1] = p;
    return Permutation(std::move(inv));
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("permutation size mismatch");
    std::vector<int> img(a.size());
    for (int p = 1; p <= a.size(); ++p) img[p - 1] = a.image(b.image(p));
    return Permutation(std::move(img));
}

AnnotatedBraid annotate(const BraidWord& b) {
    return annotate_from(b, Permutation::identity(b.strands()));
}

AnnotatedBraid annotate_from(const BraidWord& b, const Permutation& start) {
    if (start.size() != b.strands())
        throw std::invalid_argument("permutation size must equal strand count");
    std::vector<int> pi = start.one_line();
    std::vector<int> over;
    over.reserve(b.length());
    for (const auto& [pos, sign] : b.crossings()) {
        over.push_back(sign > 0 ? pi[pos - 1] : pi[pos]);
        std::swap(pi[pos - 1], pi[pos]);
    }
    return AnnotatedBraid{b, std::move(over), Permutation(std::move(pi))};
}

BraidWord invert_word(const BraidWord& b) {
    BraidWord r(b.strands());
    for (auto it = b.crossings().rbegin(); it != b.crossings().rend(); ++it)
        r.push(it->pos, -it->sign);
    return r;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
    if (a.strands() != b.strands())
        throw std::invalid_argument("strand count mismatch");
    BraidWord r = a;
    for (const auto& [pos, sign] : b.crossings()) r.push(pos, sign);
    return r;
}

bool is_pure(const BraidWord& b) {
    return annotate(b).tau.is_identity();
}

BraidWord parse_word(const std::string& text, int strands) {
    BraidWord w(strands);
    size_t i = 0;
    const size_t len = text.size();
    while (i < len) {
        if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',') {
            ++i;
            continue;
        }
        const size_t start = i;
        while (i < len && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != ',')
            ++i;
        std::string tok = text.substr(start, i - start);

        int sign = 1;
        std::string digits = tok;
        if (tok[0] == 's' || tok[0] == 'S') {
            sign = tok[0] == 's' ? 1 : -1;
            digits = tok.substr(1);
        } else if (tok[0] == '-') {
            sign = -1;
            digits = tok.substr(1);
        }
        if (digits.empty() ||
            digits.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("malformed token '" + tok + "' at offset " +
                                 std::to_string(start),
                             start, tok);
        long pos = 0;
        try {
            pos = std::stol(digits);
        } catch (const std::out_of_range&) {
            throw ParseError("token '" + tok + "' out of range at offset " +
                                 std::to_string(start),
                             start, tok);
        }
        if (pos < 1 || pos > strands - 1)
            throw ParseError("position " + std::to_string(pos) + " in token '" + tok +
                                 "' must be in 1.." + std::to_string(strands - 1),
                             start, tok);
        w.push(static_cast<int>(pos), sign);
    }
    return w;
}

std::string print_word(const BraidWord& b) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [pos, sign] : b.crossings()) {
        if (!first) out << " ";
        out << sign * pos;
        first = false;
    }
    return out.str();
}

namespace {

// engine output reduced by modulus; cross-platform deterministic
uint64_t pick(std::mt19937_64& eng, uint64_t bound) {
    return eng() % bound;
}

}  // namespace

BraidWord random_word(int strands, int length, uint64_t seed) {
    if (strands < 2) throw std::invalid_argument("random_word requires n >= 2");
    std::mt19937_64 eng(seed);
    BraidWord w(strands);
    for (int k = 0; k < length; ++k) {
        int pos = 1 + static_cast<int>(pick(eng, strands - 1));
        int sign = pick(eng, 2) ? 1 : -1;
        w.push(pos, sign);
    }
    return w;
}

BraidWord band_generator(int strands, int i, int j) {
    if (!(1 <= i && i < j && j <= strands))
        throw std::invalid_argument("band generator requires 1 <= i < j <= n");
    BraidWord w(strands);
    for (int k = j - 1; k > i; --k) w.push(k, 1);
    w.push(i, 1);
    w.push(i, 1);
    for (int k = i + 1; k <= j - 1; ++k) w.push(k, -1);
    return w;
}

BraidWord random_pure(int strands, int bands, uint64_t seed) {
    if (strands < 2) throw std::invalid_argument("random_pure requires n >= 2");
    std::mt19937_64 eng(seed);
    BraidWord w(strands);
    for (int k = 0; k < bands; ++k) {
        int i = 1 + static_cast<int>(pick(eng, strands));
        int j = 1 + static_cast<int>(pick(eng, strands));
        while (j == i) j = 1 + static_cast<int>(pick(eng, strands));
        if (i > j) std::swap(i, j);
        BraidWord band = band_generator(strands, i, j);
        if (pick(eng, 2)) band = invert_word(band);
        w = concat(w, band);
    }
    if (!is_pure(w)) throw std::logic_error("band product failed purity check");
    return w;
}

}  // namespace gassner
