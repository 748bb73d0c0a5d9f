// Braid words, the over-strand annotation, permutation bookkeeping, parsing
// and deterministic random sampling.  Strands are indexed 1..n at the bottom;
// generator positions are 1..n-1.

#ifndef GASSNER_BRAID_HPP
#define GASSNER_BRAID_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gassner {

// position i in 1..n-1, sign +1 for sigma_i, -1 for its inverse
struct Crossing {
    int pos;
    int sign;
    bool operator==(const Crossing&) const = default;
};

class BraidWord {
public:
    explicit BraidWord(int strands) : strands_(strands) {
        if (strands < 1) throw std::invalid_argument("strand count must be >= 1");
    }
    BraidWord(int strands, std::vector<Crossing> crossings);

    int strands() const { return strands_; }
    const std::vector<Crossing>& crossings() const { return crossings_; }
    size_t length() const { return crossings_.size(); }

    void push(int pos, int sign);

    bool operator==(const BraidWord&) const = default;

private:
    int strands_;
    std::vector<Crossing> crossings_;
};

// One-line notation: image(p) is the index of the strand currently at
// position p, read at the top.
class Permutation {
public:
    static Permutation identity(int n);
    explicit Permutation(std::vector<int> image);

    int size() const { return static_cast<int>(image_.size()); }
    int image(int p) const { return image_[p - 1]; }  // p is 1-based
    const std::vector<int>& one_line() const { return image_; }

    bool is_identity() const;
    Permutation inverse() const;
    // (a o b)(p) = a(b(p))
    friend Permutation compose(const Permutation& a, const Permutation& b);

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> image_;
};

struct AnnotatedBraid {
    BraidWord word;
    std::vector<int> over;  // over-strand index at each crossing
    Permutation tau;        // strand indices read at the top
};

// Walk the word keeping track of which strand occupies each position.
// At a positive crossing the strand entering from position i passes over;
// at a negative one the strand at position i+1 does.
AnnotatedBraid annotate(const BraidWord& b);

// Same walk, started from an arbitrary strand arrangement instead of the
// identity.  annotate(b) == annotate_from(b, identity).
AnnotatedBraid annotate_from(const BraidWord& b, const Permutation& start);

// reversed crossing order with flipped signs; tau of the result is tau^{-1}
BraidWord invert_word(const BraidWord& b);

BraidWord concat(const BraidWord& a, const BraidWord& b);

// true iff the word induces the identity permutation
bool is_pure(const BraidWord& b);

// Grammar: whitespace- or comma-separated tokens; integer m > 0 is sigma_m,
// m < 0 is sigma_|m| inverse; aliases s3 (= sigma_3) and S3 (= sigma_3
// inverse) are accepted.  Positions must lie in 1..n-1.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, size_t offset, std::string token)
        : std::runtime_error(std::move(msg)), offset_(offset), token_(std::move(token)) {}
    size_t offset() const { return offset_; }        // character offset into the input
    const std::string& token() const { return token_; }

private:
    size_t offset_;
    std::string token_;
};

BraidWord parse_word(const std::string& text, int strands);

// signed-integer form, e.g. "1 -3 2"; empty word prints ""
std::string print_word(const BraidWord& b);

// Deterministic for a fixed seed.
BraidWord random_word(int strands, int length, uint64_t seed);

// Band generator A_{ij} = (s_{j-1}...s_{i+1}) s_i^2 (s_{i+1}^-1...s_{j-1}^-1),
// 1 <= i < j <= n; a pure braid.
BraidWord band_generator(int strands, int i, int j);

// Product of `bands` uniformly chosen A_{ij}^{+-1}; checked pure before return.
BraidWord random_pure(int strands, int bands, uint64_t seed);

}  // namespace gassner

#endif
