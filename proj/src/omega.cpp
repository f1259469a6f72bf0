#include "nqm/omega.hpp"

#include "nqm/render.hpp"
#include "nqm/rng.hpp"

namespace nqm {

namespace {

// Largest mode over the nonempty monomials of e, if any.
std::optional<int> max_mode(const Element& e) {
    std::optional<int> m;
    for (const auto& [mono, c] : e.terms()) {
        if (mono.empty()) continue;
        int v = mono.back();
        if (!m || v > *m) m = v;
    }
    return m;
}

std::optional<int> min_mode(const Element& e) {
    std::optional<int> m;
    for (const auto& [mono, c] : e.terms()) {
        if (mono.empty()) continue;
        int v = mono.front();
        if (!m || v < *m) m = v;
    }
    return m;
}

Element omega_psi_monomial(int k, const Monomial& m) {
    Element out;
    if (m.empty()) return out;
    const int head = m.front();
    Monomial rest(m.begin() + 1, m.end());
    if (k == -head) out += Scalar::gamma_pow(k) * Element::term(rest, Scalar(1));
    if (!rest.empty()) {
        // omega_psi(k - r, rest) vanishes once k - r < -max(rest).
        const int rMax = k + rest.back();
        for (int r = 0; r <= rMax; ++r) {
            Element sub = omega_psi_monomial(k - r, rest);
            if (sub.is_zero()) continue;
            Scalar c = g_coeff(r, GSeries::bar) * Scalar::gamma_pow(r);
            out += c * multiply(Element::x_minus(head + r), sub);
        }
    }
    return out;
}

Element omega_phi_monomial(int k, const Monomial& m) {
    Element out;
    if (m.empty()) return out;
    const int head = m.front();
    Monomial rest(m.begin() + 1, m.end());
    if (k == -head) out += Scalar::gamma_pow(head) * Element::term(rest, Scalar(1));
    if (!rest.empty()) {
        // omega_phi(k + r, rest) vanishes once k + r > -min(rest).
        const int rMax = -rest.front() - k;
        for (int r = 0; r <= rMax; ++r) {
            Element sub = omega_phi_monomial(k + r, rest);
            if (sub.is_zero()) continue;
            Scalar c = g_coeff(r, GSeries::plain) * Scalar::gamma_pow(r);
            out += c * multiply(Element::x_minus(head - r), sub);
        }
    }
    return out;
}

}  // namespace

Element omega_psi(int k, const Element& e) {
    Element out;
    for (const auto& [m, c] : e.terms()) out += c * omega_psi_monomial(k, m);
    return out;
}

Element omega_phi(int k, const Element& e) {
    Element out;
    for (const auto& [m, c] : e.terms()) out += c * omega_phi_monomial(k, m);
    return out;
}

Element omega_apply(OmegaKind kind, int k, const Element& e) {
    return kind == OmegaKind::psi ? omega_psi(k, e) : omega_phi(k, e);
}

std::optional<OmegaRel> omega_rel_from_name(const std::string& name) {
    if (name == "eq26") return OmegaRel::eq26;
    if (name == "eq27") return OmegaRel::eq27;
    if (name == "eq28") return OmegaRel::eq28;
    if (name == "eq29") return OmegaRel::eq29;
    if (name == "eq30") return OmegaRel::eq30;
    return std::nullopt;
}

std::string omega_rel_name(OmegaRel rel) {
    switch (rel) {
        case OmegaRel::eq26: return "eq26";
        case OmegaRel::eq27: return "eq27";
        case OmegaRel::eq28: return "eq28";
        case OmegaRel::eq29: return "eq29";
        case OmegaRel::eq30: return "eq30";
    }
    return "?";
}

namespace {

// eq26 components: omega_psi(k) on x^-(m)*e against the unfolded recursion.
bool check_eq26_at(int k, int m, const Element& e, Element& lhs, Element& rhs) {
    lhs = omega_psi(k, multiply(Element::x_minus(m), e));
    rhs = Element::zero();
    if (k == -m) rhs += Scalar::gamma_pow(k) * e;
    if (auto mm = max_mode(e)) {
        for (int r = 0; r <= k + *mm; ++r) {
            Element sub = omega_psi(k - r, e);
            if (sub.is_zero()) continue;
            rhs += (g_coeff(r, GSeries::bar) * Scalar::gamma_pow(r)) *
                   multiply(Element::x_minus(m + r), sub);
        }
    }
    return lhs == rhs;
}

bool check_eq27_at(int k, int m, const Element& e, Element& lhs, Element& rhs) {
    lhs = omega_phi(k, multiply(Element::x_minus(m), e));
    rhs = Element::zero();
    if (k == -m) rhs += Scalar::gamma_pow(m) * e;
    if (auto mn = min_mode(e)) {
        for (int r = 0; r <= -*mn - k; ++r) {
            Element sub = omega_phi(k + r, e);
            if (sub.is_zero()) continue;
            rhs += (g_coeff(r, GSeries::plain) * Scalar::gamma_pow(r)) *
                   multiply(Element::x_minus(m - r), sub);
        }
    }
    return lhs == rhs;
}

// Two-index component of (c1 u1 - c2 u2) A(u1) B(u2) = (d1 u1 - d2 u2) B(u2) A(u1)
// specialized per relation below.
bool check_eq28_at(int k, int l, const Element& e, Element& lhs, Element& rhs) {
    const Scalar q2 = Scalar::q_pow(2);
    lhs = q2 * omega_psi(k + 1, omega_psi(l, e)) - omega_psi(k, omega_psi(l + 1, e));
    rhs = omega_psi(l, omega_psi(k + 1, e)) - q2 * omega_psi(l + 1, omega_psi(k, e));
    return lhs == rhs;
}

bool check_eq29_at(int k, int l, const Element& e, Element& lhs, Element& rhs) {
    const Scalar q2 = Scalar::q_pow(2);
    lhs = q2 * omega_phi(k + 1, omega_phi(l, e)) - omega_phi(k, omega_phi(l + 1, e));
    rhs = omega_phi(l, omega_phi(k + 1, e)) - q2 * omega_phi(l + 1, omega_phi(k, e));
    return lhs == rhs;
}

bool check_eq30_at(int k, int l, const Element& e, Element& lhs, Element& rhs) {
    const Scalar q2 = Scalar::q_pow(2);
    const Scalar g2 = Scalar::gamma_pow(2);
    lhs = (q2 * g2) * omega_phi(k + 1, omega_psi(l, e)) - omega_phi(k, omega_psi(l + 1, e));
    rhs = g2 * omega_psi(l, omega_phi(k + 1, e)) - q2 * omega_psi(l + 1, omega_phi(k, e));
    return lhs == rhs;
}

}  // namespace

RelationReport check_omega_relation(OmegaRel rel, const SampleSpec& spec) {
    RelationReport rep;
    rep.rel = omega_rel_name(rel);
    SplitMix64 rng(spec.seed);
    for (int s = 0; s < spec.samples; ++s) {
        Element e = random_element(rng, spec.lenMax, spec.modeLo, spec.modeHi);
        for (int k = spec.idxLo; k <= spec.idxHi; ++k) {
            const bool single = (rel == OmegaRel::eq26 || rel == OmegaRel::eq27);
            const int jLo = single ? spec.modeLo : spec.idxLo;
            const int jHi = single ? spec.modeHi : spec.idxHi;
            for (int j = jLo; j <= jHi; ++j) {
                Element lhs, rhs;
                bool ok = true;
                switch (rel) {
                    case OmegaRel::eq26: ok = check_eq26_at(k, j, e, lhs, rhs); break;
                    case OmegaRel::eq27: ok = check_eq27_at(k, j, e, lhs, rhs); break;
                    case OmegaRel::eq28: ok = check_eq28_at(k, j, e, lhs, rhs); break;
                    case OmegaRel::eq29: ok = check_eq29_at(k, j, e, lhs, rhs); break;
                    case OmegaRel::eq30: ok = check_eq30_at(k, j, e, lhs, rhs); break;
                }
                ++rep.cases;
                if (!ok && rep.pass) {
                    rep.pass = false;
                    rep.first_failure = Counterexample{
                        rep.rel + " at (" + std::to_string(k) + "," + std::to_string(j) +
                            ") on " + render(e),
                        render(lhs), render(rhs)};
                }
            }
        }
    }
    return rep;
}

bool check_mixed_product_identity(int k, int m, const Element& e) {
    Element lhs = omega_psi(k, omega_phi(m, e));
    Element rhs;
    if (auto mm = max_mode(e)) {
        for (int r = 0; r <= k + *mm; ++r) {
            Element sub = omega_psi(k - r, e);
            if (sub.is_zero()) continue;
            rhs += (g_coeff(r, GSeries::plain) * Scalar::gamma_pow(2 * r)) *
                   omega_phi(m + r, sub);
        }
    }
    return lhs == rhs;
}

}  // namespace nqm
