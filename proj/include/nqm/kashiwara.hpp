#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nqm/algebra.hpp"
#include "nqm/omega.hpp"

namespace nqm {

/// Generator of the Kashiwara algebra: x^-(n), Omega_psi(k), or a central
/// gam^(halfSteps/2) factor.
struct KGen {
    enum class Kind { XMinus, OmegaPsi, GammaHalf };
    Kind kind = Kind::XMinus;
    int idx = 0;  // mode, operator index, or gamma half-steps

    static KGen x_minus(int n) { return {Kind::XMinus, n}; }
    static KGen omega_psi(int k) { return {Kind::OmegaPsi, k}; }
    static KGen gamma_half(int halfSteps) { return {Kind::GammaHalf, halfSteps}; }

    friend bool operator==(const KGen&, const KGen&) = default;
    friend auto operator<=>(const KGen&, const KGen&) = default;
};

using KWord = std::vector<KGen>;

/// Linear combination of free generator words.  Words are not reduced
/// modulo the defining relations: equality of operators is only ever
/// decided through the action on the module (see k_act).
class KElement {
public:
    using TermMap = std::map<KWord, Scalar>;

    KElement() = default;

    static KElement zero() { return KElement(); }
    static KElement unit() { return term(KWord{}, Scalar(1)); }
    static KElement gen(KGen g) { return term(KWord{g}, Scalar(1)); }
    static KElement term(KWord w, Scalar c);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const KWord& w, const Scalar& c);

    KElement& operator+=(const KElement& o);
    KElement& operator-=(const KElement& o);
    friend KElement operator+(KElement a, const KElement& b) { return a += b; }
    friend KElement operator-(KElement a, const KElement& b) { return a -= b; }
    friend KElement operator*(const Scalar& c, const KElement& e);
    /// Free word concatenation, extended bilinearly.
    friend KElement operator*(const KElement& a, const KElement& b);
    friend bool operator==(const KElement& a, const KElement& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const KElement& a, const KElement& b) { return !(a == b); }

private:
    TermMap terms_;
};

/// Left action on the module: generators apply right to left; x^-(n) by
/// left multiplication, Omega_psi(k) by omega_psi, gamma factors as ring
/// scalars.
Element k_act(const KElement& w, const Element& e);

/// The involutive anti-automorphism: reverses words and swaps
/// x^-(m) <-> Omega_psi(-m), fixing gamma.
KElement alpha_bar(const KElement& w);

struct QuotientCheckSpec {
    int wordLenMax = 3;
    int idxLo = -3, idxHi = 3;
    int samples = 50;
    std::uint64_t seed = 42;
};

struct QuotientReport {
    bool pass = true;
    long cases = 0;
    std::optional<std::string> first_failure;
};

/// Checks that the action on 1 only depends on the class of a word modulo
/// the left ideal generated by the Omega_psi(k): adding sampled
/// u * Omega_psi(k) never changes k_act(., 1).
QuotientReport quotient_check(const QuotientCheckSpec& spec);

/// Random free word with generators drawn from x^-, Omega_psi and gamma
/// half-powers, indices in [lo, hi].
KWord random_kword(class SplitMix64& rng, int lenMax, int lo, int hi);

/// Defining relations, as (left side) - (right side) words.  Applied through
/// k_act they must annihilate every element of the module.
enum class KashiwaraRel { mixed, eq35, eq36 };

std::optional<KashiwaraRel> kashiwara_rel_from_name(const std::string& name);
std::string kashiwara_rel_name(KashiwaraRel rel);

/// mixed: q^2 gam W(m) x(n+1) - W(m+1) x(n)
///        - (q^2 - 1) gam^(m+1) delta_{m,-n-1}
///        - gam x(n+1) W(m) + q^2 x(n) W(m+1).
/// The delta coefficient is the engine-derived one; see docs/FINDINGS.md.
KElement kashiwara_relation(KashiwaraRel rel, int m, int n);

RelationReport check_kashiwara_relation(KashiwaraRel rel, const SampleSpec& spec);

}  // namespace nqm
