#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "nqm/form.hpp"
#include "nqm/linalg.hpp"
#include "nqm/omega.hpp"
#include "nqm/render.hpp"
#include "nqm/rng.hpp"

using namespace nqm;

TEST_CASE("normalization and unit pairing") {
    CHECK(bilinear_pair(Element::unit(), Element::unit()) == Scalar(1));
    CHECK(bilinear_pair(Element::unit(), Element::x_minus(2)).is_zero());
    CHECK(bilinear_pair(Element::x_minus(2), Element::unit()).is_zero());
}

TEST_CASE("generator pairing") {
    for (int n = -3; n <= 3; ++n)
        for (int m = -3; m <= 3; ++m) {
            Scalar expect = (n == m) ? Scalar::gamma_pow(-n) : Scalar();
            CHECK(bilinear_pair(Element::x_minus(n), Element::x_minus(m)) == expect);
        }
}

TEST_CASE("quadratic norm value") {
    Element e = Element::term({0, 0}, Scalar(1));
    CHECK(bilinear_pair(e, e) == Scalar(1) + Scalar::q_pow(2));
}

TEST_CASE("symmetry, adjointness, orthogonality") {
    SplitMix64 rng(41);
    for (int i = 0; i < 120; ++i) {
        Element a = random_element(rng, 3, -3, 3);
        Element b = random_element(rng, 3, -3, 3);
        CHECK(bilinear_pair(a, b) == bilinear_pair(b, a));
        const int m = rng.uniform_int(-3, 3);
        CHECK(bilinear_pair(multiply(Element::x_minus(m), a), b) ==
              bilinear_pair(a, omega_psi(-m, b)));
        Monomial ma = random_word(rng, 3, -3, 3);
        Monomial mb = random_word(rng, 3, -3, 3);
        std::sort(ma.begin(), ma.end());
        std::sort(mb.begin(), mb.end());
        if (!(weight_of(ma) == weight_of(mb)))
            CHECK(bilinear_pair(Element::term(ma, Scalar(1)), Element::term(mb, Scalar(1)))
                      .is_zero());
    }
}

TEST_CASE("gamma factors move across as ring scalars") {
    Element a = Element::x_minus(1);
    Element b = Element::x_minus(1);
    Scalar g = Scalar::gamma_pow_half(1);
    CHECK(bilinear_pair(g * a, b) == bilinear_pair(a, g * b));
    CHECK(bilinear_pair(g * a, b) == g * bilinear_pair(a, b));
}

TEST_CASE("tiny gram matrices") {
    GramMatrix g0 = gram(0, 0, -2, 2);
    REQUIRE(g0.basis.size() == 1);
    CHECK(g0.entries[0][0] == Scalar(1));

    for (int n = -2; n <= 2; ++n) {
        GramMatrix g1 = gram(1, n, -2, 2);
        REQUIRE(g1.basis.size() == 1);
        CHECK(g1.entries[0][0] == Scalar::gamma_pow(-n));
    }
}

TEST_CASE("gram 2/0 window 2 block") {
    GramMatrix g = gram(2, 0, -2, 2);
    REQUIRE(g.basis.size() == 3);
    CHECK(g.basis == std::vector<Monomial>{{-2, 2}, {-1, 1}, {0, 0}});
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) CHECK(g.entries[i][j] == g.entries[j][i]);

    GramRankReport rep = gram_rank_report(g, {Rational(7, 5), Rational(11, 3)});
    REQUIRE(rep.symbolic_det_nonzero.has_value());
    CHECK(*rep.symbolic_det_nonzero);
    REQUIRE(rep.point_ranks.size() == 2);
    CHECK(rep.point_ranks[0].second == 3);
    CHECK(rep.point_ranks[1].second == 3);
}

TEST_CASE("degenerate evaluation points are rejected") {
    GramMatrix g = gram(1, 0, -1, 1);
    CHECK_THROWS_AS(gram_rank_report(g, {Rational(1)}), std::invalid_argument);
    CHECK_THROWS_AS(gram_rank_report(g, {Rational(0)}), std::invalid_argument);
    CHECK_THROWS_AS(gram_rank_report(g, {Rational(-1)}), std::invalid_argument);
}

TEST_CASE("symbolic determinant skipped for large blocks") {
    GramMatrix g = gram(2, 0, -3, 3);  // 4x4... window -3..3 gives 4 basis vectors
    if (g.basis.size() <= 6) {
        GramRankReport rep = gram_rank_report(g, {Rational(7, 5)});
        CHECK(rep.symbolic_det_nonzero.has_value());
    }
    GramMatrix big = gram(3, 0, -3, 3);
    if (big.basis.size() > 6) {
        GramRankReport rep = gram_rank_report(big, {Rational(7, 5)});
        CHECK_FALSE(rep.symbolic_det_nonzero.has_value());
        CHECK_FALSE(rep.note.empty());
    }
}

TEST_CASE("bareiss rank over rationals and the Laurent ring") {
    std::vector<std::vector<Rational>> m{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    CHECK(bareiss_rank(m) == 2);
    std::vector<std::vector<Scalar>> s{
        {Scalar::q_pow(1), Scalar(1)},
        {Scalar::q_pow(2), Scalar::q_pow(1)}};
    CHECK(bareiss_rank(s) == 1);
    s[1][1] = Scalar::q_pow(-1);
    CHECK(bareiss_rank(s) == 2);
}
