#include <doctest.h>

#include <random>
#include <vector>

#include "gassner/gassner.hpp"

using namespace gassner;

namespace {

LaurentPoly t(int vars, int i) { return LaurentPoly::variable(vars, i); }
LaurentPoly one(int vars) { return LaurentPoly::one(vars); }

const BraidWord& b0() {
    static const BraidWord b(4, {{1, 1}, {3, -1}, {2, 1}});
    return b;
}

VWWord random_vw(int n, int len, std::mt19937_64& eng) {
    VWWord w(n);
    for (int k = 0; k < len; ++k) {
        int i = 1 + static_cast<int>(eng() % n);
        int j = 1 + static_cast<int>(eng() % n);
        if (j == i) j = i % n + 1;
        w.push(i, j, eng() % 2 ? 1 : -1);
    }
    return w;
}

}  // namespace

TEST_CASE("the printed 5x5 generator") {
    const LaurentMatrix u = generator_matrix(5, 3, 1, 3);
    LaurentMatrix expect = LaurentMatrix::identity(5, 5);
    expect.at(2, 2) = one(5) - t(5, 3);
    expect.at(2, 3) = one(5);
    expect.at(3, 2) = t(5, 3);
    expect.at(3, 3) = LaurentPoly::zero(5);
    CHECK(u == expect);
}

TEST_CASE("the inverse generator block at n=2") {
    const LaurentMatrix u = generator_matrix(2, 1, -1, 2);
    CHECK(u.at(0, 0) == LaurentPoly::zero(2));
    CHECK(u.at(0, 1) == t(2, 2).bar());
    CHECK(u.at(1, 0) == one(2));
    CHECK(u.at(1, 1) == one(2) - t(2, 2).bar());
}

TEST_CASE("generator index guards") {
    CHECK_THROWS_AS(generator_matrix(4, 0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(generator_matrix(4, 4, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(generator_matrix(4, 1, 1, 5), std::invalid_argument);
}

TEST_CASE("gassner matrix of b0 matches the worked 4x4 example") {
    const LaurentMatrix g = gassner_matrix(b0());
    CHECK(g.at(0, 0).str() == "1 - t1");
    CHECK(g.at(0, 1).str() == "1 - t1");
    CHECK(g.at(0, 2).str() == "1");
    CHECK(g.at(0, 3).str() == "0");
    CHECK(g.at(1, 0).str() == "t1");
    CHECK(g.at(1, 1).str() == "0");
    CHECK(g.at(1, 2).str() == "0");
    CHECK(g.at(1, 3).str() == "0");
    CHECK(g.at(2, 0).str() == "0");
    CHECK(g.at(2, 1).str() == "0");
    CHECK(g.at(2, 2).str() == "0");
    CHECK(g.at(2, 3).str() == "t4^-1");
    CHECK(g.at(3, 0).str() == "0");
    CHECK(g.at(3, 1).str() == "t1");
    CHECK(g.at(3, 2).str() == "0");
    CHECK(g.at(3, 3).str() == "1 - t4^-1");
}

TEST_CASE("gassner of the empty word is the identity") {
    CHECK(gassner_matrix(BraidWord(3)) == LaurentMatrix::identity(3, 3));
}

TEST_CASE("gassner respects the braid relation") {
    const BraidWord lhs(3, {{1, 1}, {2, 1}, {1, 1}});
    const BraidWord rhs(3, {{2, 1}, {1, 1}, {2, 1}});
    CHECK(gassner_matrix(lhs) == gassner_matrix(rhs));
}

TEST_CASE("relation rewrites anywhere inside a word preserve gassner") {
    std::mt19937_64 eng(61);
    for (int rep = 0; rep < 30; ++rep) {
        const int n = 3 + static_cast<int>(eng() % 4);
        const BraidWord left = random_word(n, static_cast<int>(eng() % 8), eng());
        const BraidWord right = random_word(n, static_cast<int>(eng() % 8), eng());

        const int i = 1 + static_cast<int>(eng() % (n - 2));
        BraidWord braid_l = left, braid_r = left;
        for (int p : {i, i + 1, i}) braid_l.push(p, 1);
        for (int p : {i + 1, i, i + 1}) braid_r.push(p, 1);
        CHECK(gassner_matrix(concat(braid_l, right)) == gassner_matrix(concat(braid_r, right)));

        if (n >= 4) {
            const int a = 1, b = 3 + static_cast<int>(eng() % (n - 3));
            BraidWord far_l = left, far_r = left;
            far_l.push(a, 1);
            far_l.push(b, 1);
            far_r.push(b, 1);
            far_r.push(a, 1);
            CHECK(gassner_matrix(concat(far_l, right)) == gassner_matrix(concat(far_r, right)));
        }
    }
}

TEST_CASE("gassner_inverse inverts exactly") {
    CHECK(gassner_inverse(BraidWord(3)) == LaurentMatrix::identity(3, 3));
    CHECK(gassner_matrix(b0()) * gassner_inverse(b0()) == LaurentMatrix::identity(4, 4));
    CHECK(gassner_inverse(b0()) * gassner_matrix(b0()) == LaurentMatrix::identity(4, 4));

    // single positive crossing: the inverse keeps the over strand's variable t1
    const BraidWord s1(2, {{1, 1}});
    const LaurentMatrix inv = gassner_inverse(s1);
    CHECK(inv.at(0, 0) == LaurentPoly::zero(2));
    CHECK(inv.at(0, 1) == t(2, 1).bar());
    CHECK(inv.at(1, 0) == one(2));
    CHECK(inv.at(1, 1) == one(2) - t(2, 1).bar());

    std::mt19937_64 eng(67);
    for (int rep = 0; rep < 30; ++rep) {
        const int n = 2 + static_cast<int>(eng() % 4);
        const BraidWord b = random_word(n, static_cast<int>(eng() % 18), eng());
        CHECK(gassner_matrix(b) * gassner_inverse(b) == LaurentMatrix::identity(n, n));
    }
}

TEST_CASE("cleared omega matrices") {
    const ScaledMatrix o1 = omega_cleared(Permutation::identity(1));
    CHECK(o1.numerator == LaurentMatrix::identity(1, 1));
    CHECK(o1.denominator == one(1) - t(1, 1));

    const ScaledMatrix o2 = omega_cleared(Permutation::identity(2));
    LaurentMatrix expect(2, 2);
    expect.at(0, 0) = one(2) - t(2, 2);
    expect.at(1, 0) = delta(2);
    expect.at(1, 1) = one(2) - t(2, 1);
    CHECK(o2.numerator == expect);
    CHECK(o2.denominator == delta(2));
}

TEST_CASE("unitarity holds for every generator at small n") {
    for (int n = 2; n <= 5; ++n)
        for (int i = 1; i < n; ++i)
            for (int sign : {1, -1}) {
                const BraidWord b(n, {{i, sign}});
                CHECK(verify_unitarity(b).holds);
            }
}

TEST_CASE("unitarity holds for the empty word and for b0") {
    const UnitarityReport empty_rep = verify_unitarity(BraidWord(3));
    CHECK(empty_rep.holds);
    CHECK(empty_rep.lhs == omega_cleared(Permutation::identity(3)).numerator);
    CHECK(verify_unitarity(b0()).holds);
}

TEST_CASE("unitarity holds on random words") {
    std::mt19937_64 eng(71);
    for (int rep = 0; rep < 40; ++rep) {
        const int n = 2 + static_cast<int>(eng() % 4);
        const BraidWord b = random_word(n, static_cast<int>(eng() % 16), eng());
        CHECK(verify_unitarity(b).holds);
    }
}

TEST_CASE("the bar-transposed variant holds on pure braids") {
    CHECK(verify_unitarity_variant(BraidWord(2, {{1, 1}, {1, 1}})));
    CHECK(verify_unitarity_variant(BraidWord(2)));
    CHECK(verify_unitarity_variant(band_generator(3, 1, 3)));
    CHECK_THROWS_AS(verify_unitarity_variant(BraidWord(2, {{1, 1}})),
                    std::invalid_argument);
    std::mt19937_64 eng(73);
    for (int rep = 0; rep < 15; ++rep) {
        const int n = 2 + static_cast<int>(eng() % 4);
        CHECK(verify_unitarity_variant(random_pure(n, 1 + static_cast<int>(eng() % 4), eng())));
    }
}

TEST_CASE("relabel permutes variables") {
    const LaurentMatrix u = generator_matrix(2, 1, 1, 1);
    CHECK(relabel(u, Permutation::identity(2)) == u);
    CHECK(relabel(u, Permutation({2, 1})) == generator_matrix(2, 1, 1, 2));
    std::mt19937_64 eng(79);
    const LaurentMatrix m = gassner_matrix(random_word(4, 9, eng()));
    const Permutation sigma({3, 1, 4, 2});
    CHECK(relabel(relabel(m, sigma), sigma.inverse()) == m);
}

TEST_CASE("twisted multiplicativity") {
    std::mt19937_64 eng(83);
    for (int rep = 0; rep < 30; ++rep) {
        const int n = 2 + static_cast<int>(eng() % 4);
        const BraidWord a = random_word(n, static_cast<int>(eng() % 12), eng());
        const BraidWord b = random_word(n, static_cast<int>(eng() % 12), eng());
        CHECK(gassner_matrix(concat(a, b)) ==
              gassner_matrix(a) * relabel(gassner_matrix(b), annotate(a).tau));
    }
}

TEST_CASE("plain multiplicativity on pure braids") {
    std::mt19937_64 eng(89);
    for (int rep = 0; rep < 15; ++rep) {
        const int n = 2 + static_cast<int>(eng() % 4);
        const BraidWord a = random_pure(n, 1 + static_cast<int>(eng() % 3), eng());
        const BraidWord b = random_pure(n, 1 + static_cast<int>(eng() % 3), eng());
        CHECK(gassner_matrix(concat(a, b)) == gassner_matrix(a) * gassner_matrix(b));
    }
}

TEST_CASE("determinant follows the over-strand monomial formula") {
    std::mt19937_64 eng(97);
    for (int rep = 0; rep < 20; ++rep) {
        const int n = 2 + static_cast<int>(eng() % 4);
        const BraidWord b = random_word(n, static_cast<int>(eng() % 10), eng());
        CHECK(gassner_matrix(b).det() == det_from_word(b));
    }
}

TEST_CASE("the all-ones row vector is fixed") {
    std::mt19937_64 eng(101);
    for (int rep = 0; rep < 20; ++rep) {
        const int n = 2 + static_cast<int>(eng() % 4);
        CHECK(gassner_matrix(random_word(n, static_cast<int>(eng() % 20), eng())).ones_fixed());
    }
}

TEST_CASE("vw generator blocks") {
    const LaurentMatrix u12 = vw_generator(2, 1, 2, 1);
    CHECK(u12.at(0, 0) == one(2));
    CHECK(u12.at(0, 1) == one(2) - t(2, 1));
    CHECK(u12.at(1, 0) == LaurentPoly::zero(2));
    CHECK(u12.at(1, 1) == t(2, 1));

    const LaurentMatrix v12 = vw_generator_alt(2, 1, 2, 1);
    CHECK(v12.at(0, 1) == one(2) - t(2, 2));
    CHECK(v12.at(1, 1) == t(2, 1));

    CHECK_THROWS_AS(vw_generator(3, 2, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(vw_generator(3, 0, 2, 1), std::invalid_argument);
}

TEST_CASE("vw block placement keeps row i in the first slot when i > j") {
    const LaurentMatrix u = vw_generator(3, 3, 1, 1);  // block at rows/cols {3, 1}
    CHECK(u.at(2, 2) == one(3));
    CHECK(u.at(2, 0) == one(3) - t(3, 3));
    CHECK(u.at(0, 2) == LaurentPoly::zero(3));
    CHECK(u.at(0, 0) == t(3, 3));
    CHECK(u.at(1, 1) == one(3));
}

TEST_CASE("the inverse vw block substitutes t_i^-1") {
    const LaurentMatrix u = vw_generator(2, 1, 2, -1);
    CHECK(u.at(0, 0) == one(2));
    CHECK(u.at(0, 1) == one(2) - t(2, 1).bar());
    CHECK(u.at(1, 0) == LaurentPoly::zero(2));
    CHECK(u.at(1, 1) == t(2, 1).bar());
}

TEST_CASE("vw generators invert exactly, including the alternative form") {
    for (int n = 2; n <= 5; ++n)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                CHECK(vw_generator(n, i, j, 1) * vw_generator(n, i, j, -1) ==
                      LaurentMatrix::identity(n, n));
                CHECK(vw_generator_alt(n, i, j, 1) * vw_generator_alt(n, i, j, -1) ==
                      LaurentMatrix::identity(n, n));
            }
}

TEST_CASE("vw products multiply without a twist") {
    CHECK(vw_gassner(VWWord(3)) == LaurentMatrix::identity(3, 3));
    std::mt19937_64 eng(103);
    for (int rep = 0; rep < 20; ++rep) {
        const int n = 2 + static_cast<int>(eng() % 4);
        const VWWord a = random_vw(n, static_cast<int>(eng() % 6), eng);
        const VWWord b = random_vw(n, static_cast<int>(eng() % 6), eng);
        VWWord ab = a;
        for (const auto& c : b.crossings()) ab.push(c.i, c.j, c.sign);
        CHECK(vw_gassner(ab) == vw_gassner(a) * vw_gassner(b));
        CHECK(vw_gassner_prime(ab) == vw_gassner_prime(a) * vw_gassner_prime(b));
        CHECK(vw_gassner(a) * vw_gassner(vw_invert(a)) == LaurentMatrix::identity(n, n));
    }
}

TEST_CASE("diagonal matrix conjugates the two vw forms") {
    CHECK(d_matrix(1).at(0, 0) == one(1) - t(1, 1));
    CHECK(d_matrix(4).det() == delta(4));
    CHECK(d_matrix(2) * vw_generator_alt(2, 1, 2, 1) ==
          vw_generator(2, 1, 2, 1) * d_matrix(2));
    std::mt19937_64 eng(107);
    for (int rep = 0; rep < 20; ++rep) {
        const int n = 2 + static_cast<int>(eng() % 4);
        const VWWord w = random_vw(n, static_cast<int>(eng() % 8), eng);
        CHECK(d_matrix(n) * vw_gassner_prime(w) == vw_gassner(w) * d_matrix(n));
    }
}

TEST_CASE("the unitarity check fails on the pinned vw witness") {
    const VWWord w = vw_unitarity_witness();
    const UnitarityReport rep = vw_verify_unitarity(w);
    CHECK_FALSE(rep.holds);
    CHECK(rep.first_diff.has_value());
    // single generators already break it
    CHECK_FALSE(vw_verify_unitarity(VWWord(2, {{1, 2, 1}})).holds);
}

TEST_CASE("burau specialization collapses the variables") {
    const LaurentMatrix g = burau_specialize(gassner_matrix(b0()));
    CHECK(g.vars() == 1);
    CHECK(g.at(0, 0) == one(1) - t(1, 1));
    CHECK(g.at(2, 3) == t(1, 1).bar());
    CHECK(burau_specialize(LaurentMatrix::identity(3, 3)) ==
          LaurentMatrix::identity(3, 1));
    const BraidWord lhs(3, {{1, 1}, {2, 1}, {1, 1}});
    const BraidWord rhs(3, {{2, 1}, {1, 1}, {2, 1}});
    CHECK(burau_specialize(gassner_matrix(lhs)) == burau_specialize(gassner_matrix(rhs)));
}

TEST_CASE("vw word parsing and printing") {
    const VWWord w = parse_vw_word("1,2 -2,3", 3);
    CHECK(w == VWWord(3, {{1, 2, 1}, {2, 3, -1}}));
    CHECK(print_vw_word(w) == "1,2 -2,3");
    CHECK(parse_vw_word("", 3) == VWWord(3));
    CHECK_THROWS_AS(parse_vw_word("1,1", 3), ParseError);
    CHECK_THROWS_AS(parse_vw_word("1,4", 3), ParseError);
    CHECK_THROWS_AS(parse_vw_word("12", 3), ParseError);
    CHECK_THROWS_AS(parse_vw_word("a,2", 3), ParseError);
}
