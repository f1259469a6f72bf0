#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nqm/form.hpp"
#include "nqm/kashiwara.hpp"
#include "nqm/parser.hpp"
#include "nqm/render.hpp"
#include "nqm/rng.hpp"

using namespace nqm;

TEST_CASE("generator actions") {
    CHECK(k_act(KElement::gen(KGen::x_minus(0)), Element::unit()) == Element::x_minus(0));
    // Wpsi(-3) * xm(3) acting on 1 picks up the delta term gam^-3
    KElement w = KElement::gen(KGen::omega_psi(-3)) * KElement::gen(KGen::x_minus(3));
    CHECK(k_act(w, Element::unit()) == Scalar::gamma_pow(-3) * Element::unit());
    // gamma generators scale
    KElement g = KElement::gen(KGen::gamma_half(3));
    CHECK(k_act(g, Element::unit()) == Scalar::gamma_pow_half(3) * Element::unit());
    // gam^(1/2) gam^(-1/2) acts as the identity
    KElement gg = KElement::gen(KGen::gamma_half(1)) * KElement::gen(KGen::gamma_half(-1));
    CHECK(k_act(gg, Element::x_minus(2)) == Element::x_minus(2));
}

TEST_CASE("mixed relation delta value on the identity") {
    // q^2 gam W(-1) x(1) - W(0) x(0) applied to 1: engine value (q^2 - 1).
    // The delta coefficient is gamma-graded as (q^2-1) gam^(m+1); at
    // (m,n) = (-1,0) the gamma power is zero.  See docs/FINDINGS.md.
    KElement w = (Scalar::q_pow(2) * Scalar::gamma_pow(1)) *
                     KElement::term({KGen::omega_psi(-1), KGen::x_minus(1)}, Scalar(1)) -
                 KElement::term({KGen::omega_psi(0), KGen::x_minus(0)}, Scalar(1));
    CHECK(k_act(w, Element::unit()) ==
          (Scalar::q_pow(2) - Scalar(1)) * Element::unit());
}

TEST_CASE("defining relations annihilate the module") {
    SampleSpec spec;
    spec.samples = 25;
    spec.idxLo = -2;
    spec.idxHi = 2;
    for (KashiwaraRel rel : {KashiwaraRel::mixed, KashiwaraRel::eq35, KashiwaraRel::eq36}) {
        RelationReport rep = check_kashiwara_relation(rel, spec);
        INFO(rep.rel, " first failure: ",
             rep.first_failure ? rep.first_failure->what : std::string("none"));
        CHECK(rep.pass);
    }
}

TEST_CASE("alpha-bar generator map and examples") {
    KElement x1 = KElement::gen(KGen::x_minus(1));
    CHECK(alpha_bar(x1) == KElement::gen(KGen::omega_psi(-1)));
    KElement w = KElement::term({KGen::x_minus(1), KGen::omega_psi(2)}, Scalar(1));
    CHECK(alpha_bar(w) == KElement::term({KGen::x_minus(-2), KGen::omega_psi(-1)}, Scalar(1)));
    CHECK(alpha_bar(alpha_bar(w)) == w);
}

TEST_CASE("alpha-bar involution and anti-homomorphism on random words") {
    SplitMix64 rng(31);
    for (int i = 0; i < 200; ++i) {
        KElement a = KElement::term(random_kword(rng, 4, -3, 3), Scalar(1));
        KElement b = KElement::term(random_kword(rng, 4, -3, 3), Scalar(1));
        CHECK(alpha_bar(alpha_bar(a)) == a);
        CHECK(alpha_bar(a * b) == alpha_bar(b) * alpha_bar(a));
    }
}

TEST_CASE("quotient class invariance") {
    // the ideal annihilates 1
    CHECK(k_act(KElement::gen(KGen::omega_psi(5)), Element::unit()).is_zero());
    KElement w = KElement::gen(KGen::x_minus(2)) * KElement::gen(KGen::omega_psi(0));
    CHECK(k_act(w, Element::unit()).is_zero());

    QuotientCheckSpec spec;
    spec.samples = 50;
    QuotientReport rep = quotient_check(spec);
    CHECK(rep.pass);
    CHECK(rep.cases == 50);
}

TEST_CASE("form adjointness through the anti-automorphism") {
    SplitMix64 rng(33);
    for (int i = 0; i < 60; ++i) {
        Element a = random_element(rng, 2, -2, 2);
        Element b = random_element(rng, 2, -2, 2);
        const int m = rng.uniform_int(-2, 2);
        Scalar lhs = bilinear_pair(k_act(KElement::gen(KGen::x_minus(m)), a), b);
        Scalar rhs = bilinear_pair(a, k_act(KElement::gen(KGen::omega_psi(-m)), b));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("kword parsing and rendering round-trip") {
    KElement w = parse_kelement("Wpsi(-3)*xm(3)");
    CHECK(w == KElement::term({KGen::omega_psi(-3), KGen::x_minus(3)}, Scalar(1)));
    CHECK(render(w) == "Wpsi(-3)*xm(3)");
    KElement g = parse_kelement("gam(-1/2)*xm(0)");
    CHECK(g == KElement::term({KGen::gamma_half(-1), KGen::x_minus(0)}, Scalar(1)));
    CHECK(parse_kelement(render(g)) == g);
}
