// The Gassner invariant of braid words, the Omega matrices and the exact
// unitarity check, the semidirect twist, and the v/w extensions.

#ifndef GASSNER_GASSNER_HPP
#define GASSNER_GASSNER_HPP

#include <optional>
#include <string>
#include <utility>

#include "gassner/braid.hpp"
#include "gassner/matrix.hpp"

namespace gassner {

// Generator matrix for a crossing at position i decorated with variable t_j:
// the n x n identity with its 2x2 block at rows/cols {i, i+1} replaced by
//   sign=+1: [[1-t_j, 1], [t_j, 0]]     sign=-1: [[0, t_j^-1], [1, 1-t_j^-1]]
// i and var_j are 1-based.
LaurentMatrix generator_matrix(int n, int i, int sign, int var_j);

// Left-to-right product of generator matrices, one per crossing, each
// decorated with the variable of its over strand.
LaurentMatrix gassner_matrix(const BraidWord& b);

// Exact matrix inverse of gassner_matrix(b), computed inside the Laurent ring:
// the reversed word is annotated starting from tau(b), so each crossing is
// undone with the same over-strand variable it was created with.
LaurentMatrix gassner_inverse(const BraidWord& b);

// Omega(tau) cleared by Delta: diagonal entry (p,p) is the product of
// (1-t_q) over q != tau(p), entries below the diagonal are Delta, entries
// above are 0.  numerator/denominator represents Omega(tau) exactly.
ScaledMatrix omega_cleared(const Permutation& tau);

struct UnitarityReport {
    bool holds;
    LaurentMatrix lhs;  // cleared Omega(tau) * gamma^-1
    LaurentMatrix rhs;  // bar-transpose(gamma) * cleared Omega(identity)
    std::optional<std::pair<int, int>> first_diff;  // 0-based, row-major scan
};

// The unitarity property, checked in Delta-cleared form: both sides carry
// the same scalar Delta, so entrywise ring equality is equivalent to the
// fractional identity Omega(tau) gamma^-1 = bar(gamma)^T Omega(id).
UnitarityReport verify_unitarity(const BraidWord& b);

// The pure-braid variant with Omega replaced by its bar-transpose (both
// sides cleared by bar(Delta)).  Rejects non-pure input.
bool verify_unitarity_variant(const BraidWord& b);

// Substitute t_j -> t_{sigma(j)} in every entry.
LaurentMatrix relabel(const LaurentMatrix& m, const Permutation& sigma);

// Determinant of gassner_matrix(b) predicted from the word alone: the product of
// (-t_{j_alpha})^{s_alpha} over all crossings.
LaurentPoly det_from_word(const BraidWord& b);

// --- v/w extension ------------------------------------------------------

// strand pair i != j in 1..n, sign +1 or -1
struct VWCrossing {
    int i;
    int j;
    int sign;
    bool operator==(const VWCrossing&) const = default;
};

class VWWord {
public:
    explicit VWWord(int strands) : strands_(strands) {
        if (strands < 1) throw std::invalid_argument("strand count must be >= 1");
    }
    VWWord(int strands, std::vector<VWCrossing> crossings);

    int strands() const { return strands_; }
    const std::vector<VWCrossing>& crossings() const { return crossings_; }

    void push(int i, int j, int sign);

    bool operator==(const VWWord&) const = default;

private:
    int strands_;
    std::vector<VWCrossing> crossings_;
};

// Identity with the 2x2 block at rows/cols {i, j} (in that order):
//   sign=+1: [[1, 1-t_i], [0, t_i]]   sign=-1: [[1, 1-t_i^-1], [0, t_i^-1]]
LaurentMatrix vw_generator(int n, int i, int j, int sign);

// The alternative block [[1, 1-t_j], [0, t_i]] and its exact inverse
// [[1, -t_i^-1 (1-t_j)], [0, t_i^-1]].
LaurentMatrix vw_generator_alt(int n, int i, int j, int sign);

// Left-to-right products; multiplicative on concatenation (generators are
// strand-labeled, so there is no permutation twist).
LaurentMatrix vw_gassner(const VWWord& w);
LaurentMatrix vw_gassner_prime(const VWWord& w);

VWWord vw_invert(const VWWord& w);

// The unitarity check applied verbatim to a v/w word (identity permutation
// on both sides).  Generically fails; vw_unitarity_witness() pins one word
// for which it does.
UnitarityReport vw_verify_unitarity(const VWWord& w);
VWWord vw_unitarity_witness();

// D = diag(1-t_1, ..., 1-t_n); conjugates the two v/w forms:
// D * vw_gassner_prime(w) == vw_gassner(w) * D.
LaurentMatrix d_matrix(int n);

// Collapse all variables to a single t (the unreduced Burau specialization).
LaurentMatrix burau_specialize(const LaurentMatrix& m);

// Grammar: whitespace-separated tokens "i,j" for a positive crossing and
// "-i,j" for a negative one, with i != j in 1..n.
VWWord parse_vw_word(const std::string& text, int strands);
std::string print_vw_word(const VWWord& w);

}  // namespace gassner

#endif
