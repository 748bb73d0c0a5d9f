#include <doctest.h>

#include <cmath>
#include <random>

#include "gassner/gassner.hpp"
#include "gassner/numeric.hpp"

using namespace gassner;

namespace {

TorusPoint random_point(int n, double lo, double hi, std::mt19937_64& eng) {
    std::vector<double> th(n);
    for (double& x : th)
        x = lo + (hi - lo) * (static_cast<double>(eng() % 1000000) / 1000000.0);
    return TorusPoint(std::move(th));
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    double m = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            m = std::max(m, std::abs(a.at(i, j) - b.at(i, j)));
    return m;
}

}  // namespace

TEST_CASE("matrix evaluation basics") {
    const TorusPoint p({0.3, 1.1, 2.0});
    const ComplexMatrix id = eval_matrix(LaurentMatrix::identity(3, 3), p);
    CHECK(max_abs_diff(id, ComplexMatrix::identity(3)) < 1e-15);

    // t1 = 1 collapses the generator block to a permutation matrix
    const ComplexMatrix g =
        eval_matrix(gassner_matrix(BraidWord(2, {{1, 1}})), TorusPoint({0.0, 0.4}));
    CHECK(std::abs(g.at(0, 0)) < 1e-12);
    CHECK(std::abs(g.at(0, 1) - Complex(1, 0)) < 1e-12);
    CHECK(std::abs(g.at(1, 0) - Complex(1, 0)) < 1e-12);
    CHECK(std::abs(g.at(1, 1)) < 1e-12);
}

TEST_CASE("bar evaluates to the complex conjugate on the torus") {
    std::mt19937_64 eng(109);
    for (int rep = 0; rep < 10; ++rep) {
        const int n = 2 + static_cast<int>(eng() % 3);
        const LaurentMatrix m = gassner_matrix(random_word(n, 8, eng()));
        const TorusPoint p = random_point(n, 0.05, 3.0, eng);
        const ComplexMatrix direct = eval_matrix(m.bar_transpose(), p);
        const ComplexMatrix conj = eval_matrix(m, p).adjoint();
        CHECK(max_abs_diff(direct, conj) < 1e-12);
    }
}

TEST_CASE("evaluation commutes with the exact inverse") {
    std::mt19937_64 eng(113);
    for (int rep = 0; rep < 8; ++rep) {
        const int n = 2 + static_cast<int>(eng() % 4);
        const BraidWord b = random_word(n, 30, eng());
        const TorusPoint p = random_point(n, 0.05, 2.5, eng);
        const ComplexMatrix prod =
            eval_matrix(gassner_matrix(b), p) * eval_matrix(gassner_inverse(b), p);
        CHECK(max_abs_diff(prod, ComplexMatrix::identity(n)) < 1e-9);
    }
}

TEST_CASE("cleared omega matches the direct numeric omega") {
    std::mt19937_64 eng(127);
    const int n = 4;
    const ScaledMatrix oc = omega_cleared(Permutation::identity(n));
    const TorusPoint p = random_point(n, 0.1, 2.8, eng);
    const ComplexMatrix num = eval_matrix(oc.numerator, p);
    const Complex den = oc.denominator.eval(p.values());
    const ComplexMatrix direct = omega_numeric(p);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            CHECK(std::abs(num.at(i, j) / den - direct.at(i, j)) < 1e-12);
}

TEST_CASE("psi is Hermitian with cot(theta/2) diagonal") {
    std::mt19937_64 eng(131);
    for (int rep = 0; rep < 10; ++rep) {
        const TorusPoint p = random_point(4, 0.01, 3.0, eng);
        const ComplexMatrix psi = psi_numeric(p);
        CHECK(hermitian_deviation(psi) < 1e-12);
        const std::vector<Complex> tv = p.values();
        for (int i = 0; i < 4; ++i) {
            CHECK(std::abs(psi.at(i, i).imag()) < 1e-12);
            const double expect = 2.0 * (1.0 / (Complex(1, 0) - tv[i])).imag();
            CHECK(psi.at(i, i).real() == doctest::Approx(expect).epsilon(1e-12));
            CHECK(psi.at(i, i).real() ==
                  doctest::Approx(1.0 / std::tan(p.thetas[i] / 2)).epsilon(1e-9));
        }
    }
}

TEST_CASE("psi at a single strand and theta = pi vanishes") {
    const ComplexMatrix psi = psi_numeric(TorusPoint({M_PI}));
    CHECK(std::abs(psi.at(0, 0).imag()) < 1e-15);
    CHECK(std::abs(psi.at(0, 0).real()) < 1e-12);  // cot(pi/2) = 0
}

TEST_CASE("pole guard rejects theta near zero") {
    CHECK_THROWS_AS(psi_numeric(TorusPoint({0.0, 0.5})), std::domain_error);
    CHECK_THROWS_AS(psi_numeric(TorusPoint({1e-12, 0.5})), std::domain_error);
    CHECK_THROWS_AS(psi_prime_numeric(TorusPoint({0.0})), std::domain_error);
}

TEST_CASE("positive definiteness checks") {
    CHECK(is_positive_definite(ComplexMatrix::identity(3)));
    ComplexMatrix indef(2);
    indef.at(0, 0) = 1.0;
    indef.at(1, 1) = -1.0;
    CHECK_FALSE(is_positive_definite(indef));

    ComplexMatrix nonherm(2);
    nonherm.at(0, 1) = Complex(1, 0);
    CHECK_THROWS_AS(is_positive_definite(nonherm), std::invalid_argument);
}

TEST_CASE("psi and psi_prime are positive definite near t = 1") {
    std::mt19937_64 eng(137);
    for (int rep = 0; rep < 10; ++rep) {
        const TorusPoint p = random_point(4, 0.001, 0.1, eng);
        CHECK(is_positive_definite(psi_numeric(p)));
        CHECK(is_positive_definite(psi_prime_numeric(p)));
    }
}

TEST_CASE("psi loses definiteness far from t = 1") {
    // diagonal cot(theta/2) ~ 0.07 is swamped by the unit off-diagonal entries
    const ComplexMatrix psi = psi_numeric(TorusPoint({3.0, 3.1, 3.0, 2.9}));
    CHECK_FALSE(is_positive_definite(psi));
}

TEST_CASE("psi_prime is the D-congruence of psi") {
    std::mt19937_64 eng(139);
    const TorusPoint p = random_point(3, 0.05, 2.5, eng);
    const ComplexMatrix expect =
        d_numeric(p).adjoint() * psi_numeric(p) * d_numeric(p);
    CHECK(max_abs_diff(psi_prime_numeric(p), expect) < 1e-12);
    CHECK(hermitian_deviation(psi_prime_numeric(p)) < 1e-12);

    // scalar case: |1 - t|^2 scales the 1x1 form
    const TorusPoint q({0.9});
    const double scale = std::norm(Complex(1, 0) - std::polar(1.0, 0.9));
    CHECK(psi_prime_numeric(q).at(0, 0).real() ==
          doctest::Approx(scale * psi_numeric(q).at(0, 0).real()).epsilon(1e-12));
}

TEST_CASE("unitarity residual vanishes for pure braids") {
    CHECK(psi_unitarity_residual(BraidWord(2), TorusPoint({0.05, 0.07})) == 0.0);
    CHECK(psi_unitarity_residual(BraidWord(2, {{1, 1}, {1, 1}}),
                                 TorusPoint({0.05, 0.07})) <= 1e-10);
    CHECK_THROWS_AS(psi_unitarity_residual(BraidWord(2, {{1, 1}}), TorusPoint({0.1, 0.2})),
                    std::invalid_argument);

    std::mt19937_64 eng(149);
    for (int rep = 0; rep < 12; ++rep) {
        const int n = 2 + static_cast<int>(eng() % 4);
        const BraidWord b = random_pure(n, 1 + static_cast<int>(eng() % 4), eng());
        const TorusPoint p = random_point(n, 0.01, 0.2, eng);
        CHECK(psi_unitarity_residual(b, p) <= 1e-8);
        // the congruent form is preserved by the conjugated matrix
        CHECK(psi_prime_unitarity_residual(b, p) <= 1e-8);
    }
}
