#include "nqm/kashiwara.hpp"

#include <algorithm>

#include "nqm/omega.hpp"
#include "nqm/render.hpp"
#include "nqm/rng.hpp"

namespace nqm {

KElement KElement::term(KWord w, Scalar c) {
    KElement e;
    e.add_term(w, c);
    return e;
}

void KElement::add_term(const KWord& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

KElement& KElement::operator+=(const KElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

KElement& KElement::operator-=(const KElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

KElement operator*(const Scalar& c, const KElement& e) {
    KElement r;
    if (c.is_zero()) return r;
    for (const auto& [w, t] : e.terms_) r.add_term(w, c * t);
    return r;
}

KElement operator*(const KElement& a, const KElement& b) {
    KElement r;
    for (const auto& [wa, ca] : a.terms_) {
        for (const auto& [wb, cb] : b.terms_) {
            KWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    }
    return r;
}

Element k_act(const KElement& w, const Element& e) {
    Element out;
    for (const auto& [word, c] : w.terms()) {
        Element acc = e;
        for (auto it = word.rbegin(); it != word.rend() && !acc.is_zero(); ++it) {
            switch (it->kind) {
                case KGen::Kind::XMinus:
                    acc = multiply(Element::x_minus(it->idx), acc);
                    break;
                case KGen::Kind::OmegaPsi:
                    acc = omega_psi(it->idx, acc);
                    break;
                case KGen::Kind::GammaHalf:
                    acc = Scalar::gamma_pow_half(it->idx) * acc;
                    break;
            }
        }
        out += c * acc;
    }
    return out;
}

KElement alpha_bar(const KElement& w) {
    KElement out;
    for (const auto& [word, c] : w.terms()) {
        KWord rev;
        rev.reserve(word.size());
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            switch (it->kind) {
                case KGen::Kind::XMinus: rev.push_back(KGen::omega_psi(-it->idx)); break;
                case KGen::Kind::OmegaPsi: rev.push_back(KGen::x_minus(-it->idx)); break;
                case KGen::Kind::GammaHalf: rev.push_back(*it); break;
            }
        }
        out.add_term(rev, c);
    }
    return out;
}

KWord random_kword(SplitMix64& rng, int lenMax, int lo, int hi) {
    const int len = rng.uniform_int(0, lenMax);
    KWord w;
    w.reserve(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) {
        const int pick = rng.uniform_int(0, 5);
        if (pick <= 2) {
            w.push_back(KGen::x_minus(rng.uniform_int(lo, hi)));
        } else if (pick <= 4) {
            w.push_back(KGen::omega_psi(rng.uniform_int(lo, hi)));
        } else {
            const int h = rng.uniform_int(-2, 2);
            w.push_back(KGen::gamma_half(h == 0 ? 1 : h));
        }
    }
    return w;
}

std::optional<KashiwaraRel> kashiwara_rel_from_name(const std::string& name) {
    if (name == "mixed") return KashiwaraRel::mixed;
    if (name == "eq35") return KashiwaraRel::eq35;
    if (name == "eq36") return KashiwaraRel::eq36;
    return std::nullopt;
}

std::string kashiwara_rel_name(KashiwaraRel rel) {
    switch (rel) {
        case KashiwaraRel::mixed: return "mixed";
        case KashiwaraRel::eq35: return "eq35";
        case KashiwaraRel::eq36: return "eq36";
    }
    return "?";
}

namespace {

KElement word1(KGen a, KGen b) { return KElement::term(KWord{a, b}, Scalar(1)); }

}  // namespace

KElement kashiwara_relation(KashiwaraRel rel, int m, int n) {
    const Scalar q2 = Scalar::q_pow(2);
    switch (rel) {
        case KashiwaraRel::mixed: {
            const Scalar gam = Scalar::gamma_pow(1);
            KElement r = (q2 * gam) * word1(KGen::omega_psi(m), KGen::x_minus(n + 1)) -
                         word1(KGen::omega_psi(m + 1), KGen::x_minus(n)) -
                         gam * word1(KGen::x_minus(n + 1), KGen::omega_psi(m)) +
                         q2 * word1(KGen::x_minus(n), KGen::omega_psi(m + 1));
            if (m == -n - 1)
                r -= ((q2 - Scalar(1)) * Scalar::gamma_pow(m + 1)) * KElement::unit();
            return r;
        }
        case KashiwaraRel::eq35:
            return q2 * word1(KGen::omega_psi(m + 1), KGen::omega_psi(n)) -
                   word1(KGen::omega_psi(n), KGen::omega_psi(m + 1)) -
                   word1(KGen::omega_psi(m), KGen::omega_psi(n + 1)) +
                   q2 * word1(KGen::omega_psi(n + 1), KGen::omega_psi(m));
        case KashiwaraRel::eq36: {
            const Scalar qm2 = Scalar::q_pow(-2);
            return word1(KGen::x_minus(m + 1), KGen::x_minus(n)) -
                   qm2 * word1(KGen::x_minus(n), KGen::x_minus(m + 1)) -
                   qm2 * word1(KGen::x_minus(m), KGen::x_minus(n + 1)) +
                   word1(KGen::x_minus(n + 1), KGen::x_minus(m));
        }
    }
    throw std::invalid_argument("kashiwara_relation: bad relation");
}

RelationReport check_kashiwara_relation(KashiwaraRel rel, const SampleSpec& spec) {
    RelationReport rep;
    rep.rel = kashiwara_rel_name(rel);
    SplitMix64 rng(spec.seed);
    for (int s = 0; s < spec.samples; ++s) {
        Element e = random_element(rng, spec.lenMax, spec.modeLo, spec.modeHi);
        for (int m = spec.idxLo; m <= spec.idxHi; ++m) {
            for (int n = spec.idxLo; n <= spec.idxHi; ++n) {
                Element img = k_act(kashiwara_relation(rel, m, n), e);
                ++rep.cases;
                if (!img.is_zero() && rep.pass) {
                    rep.pass = false;
                    rep.first_failure = Counterexample{
                        rep.rel + " at (" + std::to_string(m) + "," + std::to_string(n) +
                            ") on " + render(e),
                        render(img), "0"};
                }
            }
        }
    }
    return rep;
}

QuotientReport quotient_check(const QuotientCheckSpec& spec) {
    QuotientReport rep;
    SplitMix64 rng(spec.seed);
    const Element one = Element::unit();
    for (int s = 0; s < spec.samples; ++s) {
        KElement w = KElement::term(random_kword(rng, spec.wordLenMax, spec.idxLo, spec.idxHi), Scalar(1));
        KElement u = KElement::term(random_kword(rng, spec.wordLenMax, spec.idxLo, spec.idxHi), Scalar(1));
        const int k = rng.uniform_int(spec.idxLo, spec.idxHi);
        KElement shifted = w + u * KElement::gen(KGen::omega_psi(k));
        Element base = k_act(w, one);
        Element moved = k_act(shifted, one);
        ++rep.cases;
        if (base != moved && rep.pass) {
            rep.pass = false;
            rep.first_failure = "class representative changed action on 1: " + render(w) +
                                " vs + " + render(u) + "*Wpsi(" + std::to_string(k) + ")";
        }
    }
    return rep;
}

}  // namespace nqm
