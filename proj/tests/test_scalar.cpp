#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nqm/render.hpp"
#include "nqm/rng.hpp"
#include "nqm/scalar.hpp"

using namespace nqm;

namespace {

Scalar random_scalar(SplitMix64& rng) {
    Scalar s;
    const int nterms = rng.uniform_int(0, 3);
    for (int i = 0; i < nterms; ++i) {
        s += Scalar::monomial(Rational(rng.uniform_int(-4, 4)), rng.uniform_int(-6, 6),
                              rng.uniform_int(-4, 4));
    }
    return s;
}

}  // namespace

TEST_CASE("q_integer values") {
    CHECK(q_integer(0).is_zero());
    CHECK(q_integer(1) == Scalar(1));
    CHECK(q_integer(3) == Scalar::q_pow(2) + Scalar(1) + Scalar::q_pow(-2));
    for (int n = -6; n <= 6; ++n) {
        CHECK(q_integer(-n) == -q_integer(n));
        // [n](q - q^-1) = q^n - q^-n
        CHECK(q_integer(n) * (Scalar::q_pow(1) - Scalar::q_pow(-1)) ==
              Scalar::q_pow(n) - Scalar::q_pow(-n));
    }
}

TEST_CASE("g series coefficients") {
    CHECK(g_coeff(0) == Scalar::q_pow(-2));
    CHECK(g_coeff(1) == (Scalar(1) - Scalar::q_pow(4)) * Scalar::q_pow(-4));
    CHECK(g_coeff(0, GSeries::bar) == Scalar::q_pow(2));
    CHECK(g_coeff(1, GSeries::bar) == Scalar::q_pow(4) - Scalar(1));
    CHECK_THROWS_AS(g_coeff(-1), std::invalid_argument);
}

TEST_CASE("g series is inverted by the bar series") {
    const int order = 8;
    TruncatedSeries self(order), barSide(order);
    for (int p = 0; p <= order; ++p) {
        self.set_coefficient(p, g_coeff(p));
        barSide.set_coefficient(p, g_coeff(p, GSeries::bar));
    }
    CHECK(self * barSide == TruncatedSeries::constant(order, Scalar(1)));
}

TEST_CASE("series exp basics") {
    TruncatedSeries zero(3);
    CHECK(series_exp(zero) == TruncatedSeries::constant(3, Scalar(1)));

    TruncatedSeries z(2);
    z.set_coefficient(1, Scalar(1));
    TruncatedSeries e = series_exp(z);
    CHECK(e.coefficient(0) == Scalar(1));
    CHECK(e.coefficient(1) == Scalar(1));
    CHECK(e.coefficient(2) == Scalar(Rational(1, 2)));

    // single multiplication: exp(-(q-q^-1)[2] z^-1) at order 1
    TruncatedSeries s(1);
    s.set_coefficient(1, -(Scalar::q_pow(1) - Scalar::q_pow(-1)) * q_integer(2));
    TruncatedSeries r = series_exp(s);
    CHECK(r.coefficient(1) == -(Scalar::q_pow(2) - Scalar::q_pow(-2)));

    TruncatedSeries bad(2);
    bad.set_coefficient(0, Scalar(1));
    CHECK_THROWS_AS(series_exp(bad), std::domain_error);
}

TEST_CASE("exp identity against the closed geometric form") {
    IdentityReport rep = exp_g_identity_check(12);
    CHECK(rep.equal);
    CHECK_FALSE(rep.first_mismatch.has_value());
    CHECK(rep.lhs[0] == Scalar(1));
    CHECK(rep.lhs[1] == (Scalar(1) - Scalar::q_pow(4)) * Scalar::q_pow(-2));
    for (int n = 1; n <= 10; ++n) CHECK(exp_g_identity_check(n).equal);
    CHECK_THROWS_AS(exp_g_identity_check(0), std::invalid_argument);
}

TEST_CASE("ring axioms on random samples") {
    SplitMix64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * Scalar(1) == a);
        CHECK(a + Scalar() == a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("canonical rendering") {
    CHECK(render(Scalar()) == "0");
    CHECK(render(Scalar(1)) == "1");
    CHECK(render(Scalar(Rational(-3, 2))) == "-3/2");
    CHECK(render(q_integer(3)) == "q^-2 + 1 + q^2");
    CHECK(render(g_coeff(1)) == "q^-4 - 1");
    CHECK(render(Scalar::monomial(Rational(1), 1, -2)) == "q^(1/2)*gam^-1");
    CHECK(render(Scalar::monomial(Rational(-5, 3), -3, 1)) == "-5/3*q^(-3/2)*gam^(1/2)");
}

TEST_CASE("evaluation at a rational point") {
    Scalar s = Scalar::q_pow(2) - Scalar::q_pow(-1);  // q^2 - q^-1
    CHECK(s.eval_q(Rational(2)) == Rational(7, 2));
    CHECK(Scalar::gamma_pow(5).eval_q(Rational(3)) == Rational(1));
    CHECK_THROWS_AS(Scalar::q_pow_half(1).eval_q(Rational(2)), std::domain_error);
}

TEST_CASE("exact division") {
    SplitMix64 rng(11);
    const Scalar d = Scalar::q_pow(1) - Scalar::q_pow(-1);
    for (int i = 0; i < 100; ++i) {
        Scalar t = random_scalar(rng);
        Scalar prod = t * d;
        if (prod.is_zero()) continue;
        CHECK(prod.div_exact(d) == t);
    }
    CHECK_THROWS_AS(Scalar(1).div_exact(d), std::domain_error);
    CHECK_THROWS_AS(Scalar(1).div_exact(Scalar()), std::domain_error);
}

TEST_CASE("bar involution") {
    SplitMix64 rng(13);
    for (int i = 0; i < 50; ++i) {
        Scalar a = random_scalar(rng), b = random_scalar(rng);
        CHECK(a.bar_q().bar_q() == a);
        CHECK((a * b).bar_q() == a.bar_q() * b.bar_q());
    }
}
