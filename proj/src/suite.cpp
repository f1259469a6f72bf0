#include "nqm/suite.hpp"

#include <algorithm>
#include <cstdlib>

#include "nqm/form.hpp"
#include "nqm/kashiwara.hpp"
#include "nqm/omega.hpp"
#include "nqm/parser.hpp"
#include "nqm/render.hpp"
#include "nqm/rng.hpp"
#include "nqm/verma.hpp"

namespace nqm {

SuiteConfig SuiteConfig::from_env(std::uint64_t seed) {
    SuiteConfig cfg;
    cfg.seed = seed;
    if (const char* cap = std::getenv("NQM_SUITE_SAMPLES")) {
        const int n = std::max(1, std::atoi(cap));
        cfg.pbwWords = std::min(cfg.pbwWords, n);
        cfg.assocTriples = std::min(cfg.assocTriples, n);
        cfg.relationSamples = std::min(cfg.relationSamples, n);
        cfg.kashiwaraSamples = std::min(cfg.kashiwaraSamples, n);
        cfg.wordSamples = std::min(cfg.wordSamples, n);
        cfg.formSamples = std::min(cfg.formSamples, n);
        cfg.quotientSamples = std::min(cfg.quotientSamples, n);
    }
    return cfg;
}

namespace {

void report(std::vector<CaseResult>& out, const std::string& name, bool pass,
            const std::string& lhs = "", const std::string& rhs = "") {
    CaseResult r;
    r.name = name;
    r.pass = pass;
    if (!pass) {
        r.lhs = lhs;
        r.rhs = rhs;
    }
    out.push_back(std::move(r));
}

// All normal-form monomials with length in [0, lenMax] and modes in [lo, hi].
std::vector<Monomial> all_monomials(int lenMax, int lo, int hi) {
    std::vector<Monomial> out{Monomial{}};
    std::vector<Monomial> frontier{Monomial{}};
    for (int len = 1; len <= lenMax; ++len) {
        std::vector<Monomial> next;
        for (const auto& m : frontier) {
            const int start = m.empty() ? lo : m.back();
            for (int v = start; v <= hi; ++v) {
                Monomial grown = m;
                grown.push_back(v);
                next.push_back(grown);
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

}  // namespace

std::vector<CaseResult> battery_identity18() {
    std::vector<CaseResult> out;
    const int order = 12;
    IdentityReport rep = exp_g_identity_check(order);
    report(out, "identity18/equal-through-order-" + std::to_string(order), rep.equal,
           rep.first_mismatch ? "mismatch at z^-" + std::to_string(*rep.first_mismatch) : "", "");
    bool constant_ok = rep.lhs[0] == Scalar(1);
    report(out, "identity18/constant-term", constant_ok, render(rep.lhs[0]), "1");
    bool pattern_ok = true;
    const Scalar lead = Scalar(1) - Scalar::q_pow(4);
    for (int r = 1; r <= order; ++r)
        if (rep.lhs[static_cast<size_t>(r)] != lead * Scalar::q_pow(-2 * r)) pattern_ok = false;
    report(out, "identity18/coefficient-pattern", pattern_ok);
    return out;
}

std::vector<CaseResult> battery_pbw(const SuiteConfig& cfg) {
    std::vector<CaseResult> out;
    SplitMix64 rng(cfg.seed);
    bool confluent = true, idempotent = true;
    std::string bad;
    for (int i = 0; i < cfg.pbwWords; ++i) {
        Monomial w = random_word(rng, 5, cfg.modeLo, cfg.modeHi);
        Element left = normal_form(w);
        SplitMix64 pickRng(cfg.seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(i + 1)));
        Element randomized = normal_form(
            w, [&pickRng](const Monomial&, const std::vector<size_t>& d) {
                return d[static_cast<size_t>(pickRng.uniform_int(0, static_cast<int>(d.size()) - 1))];
            });
        if (left != randomized) {
            confluent = false;
            if (bad.empty()) bad = render(left) + " vs " + render(randomized);
        }
        Element roundtrip = parse_element(render(left));
        if (roundtrip != left) idempotent = false;
    }
    report(out, "pbw/confluence-" + std::to_string(cfg.pbwWords) + "-words", confluent, bad);
    report(out, "pbw/idempotence-roundtrip", idempotent);

    SplitMix64 rng2(cfg.seed + 1);
    bool assoc = true;
    for (int i = 0; i < cfg.assocTriples; ++i) {
        Element a = random_element(rng2, 2, cfg.modeLo, cfg.modeHi);
        Element b = random_element(rng2, 2, cfg.modeLo, cfg.modeHi);
        Element c = random_element(rng2, 2, cfg.modeLo, cfg.modeHi);
        if (multiply(a, multiply(b, c)) != multiply(multiply(a, b), c)) assoc = false;
    }
    report(out, "pbw/associativity-" + std::to_string(cfg.assocTriples) + "-triples", assoc);

    // q = 1 specialization: the normal form of any word collapses to the
    // sorted word with total coefficient 1.
    SplitMix64 rng3(cfg.seed + 2);
    bool collapse = true;
    for (int i = 0; i < 100; ++i) {
        Monomial w = random_word(rng3, 4, cfg.modeLo, cfg.modeHi);
        Monomial sorted = w;
        std::sort(sorted.begin(), sorted.end());
        const Element nf = normal_form(w);
        for (const auto& [m, c] : nf.terms()) {
            Rational v = c.eval_q(1);
            if (m == sorted ? v != 1 : v != 0) collapse = false;
        }
    }
    report(out, "pbw/q1-specialization-collapse", collapse);
    return out;
}

std::vector<CaseResult> battery_omega_bounds() {
    std::vector<CaseResult> out;
    bool psiBound = true, phiBound = true, psiSpot = false, phiSpot = false, graded = true;
    for (const auto& m : all_monomials(3, -3, 3)) {
        if (m.empty()) {
            for (int s = -4; s <= 4; ++s)
                if (!omega_psi(s, Element::unit()).is_zero() ||
                    !omega_phi(s, Element::unit()).is_zero())
                    psiBound = false;
            continue;
        }
        Element e = Element::term(m, Scalar(1));
        const int mx = m.back(), mn = m.front();
        for (int d = 1; d <= 4; ++d) {
            if (!omega_psi(-mx - d, e).is_zero()) psiBound = false;
            if (!omega_phi(-mn + d, e).is_zero()) phiBound = false;
        }
        for (int s = -mx; s <= -mx + 8; ++s)
            if (!omega_psi(s, e).is_zero()) psiSpot = true;
        for (int s = -mn - 8; s <= -mn; ++s)
            if (!omega_phi(s, e).is_zero()) phiSpot = true;
        // Grading: weight (n, w) maps to (n-1, w+k).
        const Weight base = weight_of(m);
        for (int k = -3; k <= 3; ++k) {
            Weight expect{base.length - 1, base.deltaSum + k};
            Weight got;
            Element r = omega_psi(k, e);
            if (!r.is_zero() && (!r.is_homogeneous(&got) || !(got == expect))) graded = false;
            r = omega_phi(k, e);
            if (!r.is_zero() && (!r.is_homogeneous(&got) || !(got == expect))) graded = false;
        }
    }
    report(out, "omega/psi-vanishing-below--max-mode", psiBound);
    report(out, "omega/phi-vanishing-above--min-mode", phiBound);
    report(out, "omega/nonzero-spot-checks", psiSpot && phiSpot);
    report(out, "omega/grading", graded);
    return out;
}

std::vector<CaseResult> battery_omega_relations(const SuiteConfig& cfg) {
    std::vector<CaseResult> out;
    for (OmegaRel rel : {OmegaRel::eq26, OmegaRel::eq27, OmegaRel::eq28, OmegaRel::eq29,
                         OmegaRel::eq30}) {
        SampleSpec spec;
        spec.lenMax = 3;
        spec.modeLo = cfg.modeLo;
        spec.modeHi = cfg.modeHi;
        spec.idxLo = cfg.idxLo;
        spec.idxHi = cfg.idxHi;
        spec.samples = cfg.relationSamples;
        spec.seed = cfg.seed;
        RelationReport rep = check_omega_relation(rel, spec);
        report(out, "omega/" + rep.rel + "-" + std::to_string(rep.cases) + "-cases", rep.pass,
               rep.first_failure ? rep.first_failure->lhs : "",
               rep.first_failure ? rep.first_failure->rhs : "");
    }
    // The psi/phi product identity, spot-checked on a modest grid.
    SplitMix64 rng(cfg.seed + 3);
    bool mixed = true;
    for (int i = 0; i < std::min(cfg.relationSamples, 50); ++i) {
        Element e = random_element(rng, 3, cfg.modeLo, cfg.modeHi);
        for (int k = -2; k <= 2; ++k)
            for (int m = -2; m <= 2; ++m)
                if (!check_mixed_product_identity(k, m, e)) mixed = false;
    }
    report(out, "omega/psi-phi-product-identity", mixed);
    return out;
}

std::vector<CaseResult> battery_kashiwara(const SuiteConfig& cfg) {
    std::vector<CaseResult> out;
    for (KashiwaraRel rel : {KashiwaraRel::mixed, KashiwaraRel::eq35, KashiwaraRel::eq36}) {
        SampleSpec spec;
        spec.lenMax = 3;
        spec.modeLo = cfg.modeLo;
        spec.modeHi = cfg.modeHi;
        spec.idxLo = cfg.kashIdxLo;
        spec.idxHi = cfg.kashIdxHi;
        spec.samples = cfg.kashiwaraSamples;
        spec.seed = cfg.seed + 4;
        RelationReport rep = check_kashiwara_relation(rel, spec);
        report(out, "kashiwara/" + rep.rel + "-annihilates-" + std::to_string(rep.cases) + "-cases",
               rep.pass, rep.first_failure ? rep.first_failure->what : "",
               rep.first_failure ? rep.first_failure->lhs : "");
    }

    SplitMix64 rng2(cfg.seed + 5);
    bool involution = true, antihom = true;
    for (int i = 0; i < cfg.wordSamples; ++i) {
        KElement w1 = KElement::term(random_kword(rng2, 4, -3, 3), Scalar(1));
        KElement w2 = KElement::term(random_kword(rng2, 4, -3, 3), Scalar(1));
        if (alpha_bar(alpha_bar(w1)) != w1) involution = false;
        if (alpha_bar(w1 * w2) != alpha_bar(w2) * alpha_bar(w1)) antihom = false;
    }
    report(out, "kashiwara/alphabar-involution", involution);
    report(out, "kashiwara/alphabar-antihomomorphism", antihom);

    QuotientCheckSpec qs;
    qs.samples = cfg.quotientSamples;
    qs.seed = cfg.seed + 6;
    QuotientReport qrep = quotient_check(qs);
    report(out, "kashiwara/quotient-ideal-invariance", qrep.pass,
           qrep.first_failure.value_or(""));
    return out;
}

std::vector<CaseResult> battery_form_basic(const SuiteConfig& cfg) {
    std::vector<CaseResult> out;
    SplitMix64 rng(cfg.seed + 7);
    bool symmetric = true, adjoint = true, orthogonal = true;
    for (int i = 0; i < cfg.formSamples; ++i) {
        Element a = random_element(rng, 3, cfg.modeLo, cfg.modeHi);
        Element b = random_element(rng, 3, cfg.modeLo, cfg.modeHi);
        if (bilinear_pair(a, b) != bilinear_pair(b, a)) symmetric = false;
        const int m = rng.uniform_int(cfg.modeLo, cfg.modeHi);
        if (bilinear_pair(multiply(Element::x_minus(m), a), b) !=
            bilinear_pair(a, omega_psi(-m, b)))
            adjoint = false;
        // Cross-weight pair: homogeneous monomials of different weights.
        Monomial ma = random_word(rng, 3, cfg.modeLo, cfg.modeHi);
        Monomial mb = random_word(rng, 3, cfg.modeLo, cfg.modeHi);
        std::sort(ma.begin(), ma.end());
        std::sort(mb.begin(), mb.end());
        if (!(weight_of(ma) == weight_of(mb)) &&
            !bilinear_pair(Element::term(ma, Scalar(1)), Element::term(mb, Scalar(1))).is_zero())
            orthogonal = false;
    }
    report(out, "form/symmetry", symmetric);
    report(out, "form/omega-psi-adjointness", adjoint);
    report(out, "form/weight-orthogonality", orthogonal);

    bool delta = true;
    for (int n = -3; n <= 3; ++n) {
        for (int m = -3; m <= 3; ++m) {
            Scalar v = bilinear_pair(Element::x_minus(n), Element::x_minus(m));
            Scalar expect = n == m ? Scalar::gamma_pow(-n) : Scalar();
            if (v != expect) delta = false;
        }
    }
    report(out, "form/generator-pairing-delta-gamma", delta);
    report(out, "form/unit-normalization",
           bilinear_pair(Element::unit(), Element::unit()) == Scalar(1));
    return out;
}

std::vector<CaseResult> battery_form_gram() {
    std::vector<CaseResult> out;
    bool oneByOne = true;
    for (int n = -2; n <= 2; ++n) {
        GramMatrix g = gram(1, n, -2, 2);
        if (g.basis.size() != 1 || g.entries[0][0] != Scalar::gamma_pow(-n)) oneByOne = false;
    }
    report(out, "gram/length-1-diagonal-gamma", oneByOne);

    GramMatrix g = gram(2, 0, -2, 2);
    const std::vector<Rational> pts{Rational(7, 5), Rational(11, 3)};
    GramRankReport rep = gram_rank_report(g, pts);
    report(out, "gram/2-0-window-2-symmetric",
           g.basis.size() == 3 && g.entries[0][1] == g.entries[1][0] &&
               g.entries[0][2] == g.entries[2][0] && g.entries[1][2] == g.entries[2][1]);
    report(out, "gram/2-0-window-2-det-nonzero",
           rep.symbolic_det_nonzero.value_or(false),
           rep.det ? render(*rep.det) : "");
    bool fullRank = rep.point_ranks.size() == 2;
    for (const auto& [p, r] : rep.point_ranks)
        if (r != 3) fullRank = false;
    report(out, "gram/2-0-window-2-full-rank-at-sample-points", fullRank);
    return out;
}

std::vector<CaseResult> battery_verma_dichotomy() {
    std::vector<CaseResult> out;
    bool singularAtZero = true;
    for (int m = -1; m <= 1; ++m) {
        SingularReport rep = singular_probe(0, 1, m, -2, 2);
        if (rep.kernel_dim < 1 || rep.certified.empty() || !rep.stationarity_ok)
            singularAtZero = false;
    }
    report(out, "verma/lambda0-length1-certified-singular", singularAtZero);

    bool emptyKernel = true;
    std::string bad;
    for (int lh : {1, 2}) {
        for (int len : {1, 2}) {
            for (int m = -1; m <= 1; ++m) {
                SingularReport rep = singular_probe(lh, len, m, -2, 2);
                if (rep.kernel_dim != 0 || !rep.stationarity_ok) {
                    emptyKernel = false;
                    if (bad.empty())
                        bad = "lambdaH=" + std::to_string(lh) + " len=" + std::to_string(len) +
                              " dsum=" + std::to_string(m) +
                              " kernel=" + std::to_string(rep.kernel_dim);
                }
            }
        }
    }
    report(out, "verma/lambda12-no-singular-vectors", emptyKernel, bad);

    bool ladder = true;
    for (int lh : {0, 1, 2}) {
        for (int m = -3; m <= 3; ++m) {
            VermaElement v = act_xplus(-m, act_xminus(m, VermaElement::highest_weight(lh)));
            VermaElement expect = q_integer(lh) * VermaElement::highest_weight(lh);
            if (!(v == expect)) ladder = false;
        }
    }
    report(out, "verma/xplus-xminus-q-integer-ladder", ladder);
    return out;
}

std::vector<CaseResult> battery_verma_dualpath() {
    std::vector<CaseResult> out;
    bool match = true;
    std::string bad;
    for (const auto& m : all_monomials(2, -2, 2)) {
        VermaElement v(1, Element::term(m, Scalar(1)));
        for (int j = 1; j <= 6; ++j) {
            if (!(act_psi(j, v) == psi_expansion_oracle(j, v))) {
                match = false;
                if (bad.empty()) bad = "j=" + std::to_string(j) + " payload " + render(m);
            }
        }
    }
    report(out, "verma/psi-dual-path-j1-6", match, bad);
    return out;
}

std::vector<CaseResult> battery_verma_scan() {
    std::vector<CaseResult> out;
    // Five consecutive large s; basis words x^-(l) x^-(m-l), l = 0..2, m = 1.
    const std::vector<Rational> A{Rational(1), Rational(-1), Rational(2)};
    PairScanReport rep = length_two_scan(A, 0, 1, 4, 8, 0);
    report(out, "scan/threshold-met", rep.threshold_met);
    report(out, "scan/images-single-monomial", rep.images_monomial);
    report(out, "scan/s-independent-weights", rep.s_independent);
    bool pattern = rep.weights.size() == 3;
    for (size_t i = 0; pattern && i < rep.weights.size(); ++i)
        if (rep.weights[i] != Scalar::q_pow(-2 * static_cast<int>(i))) pattern = false;
    report(out, "scan/weight-pattern-q-pow-minus-2l", pattern,
           rep.weights.size() == 3 ? render(rep.weights[0]) + " ; " + render(rep.weights[1]) +
                                         " ; " + render(rep.weights[2])
                                   : "wrong arity");

    PairScanReport single = length_two_scan({Rational(1)}, 0, 1, 4, 8, 0);
    report(out, "scan/single-monomial-never-vanishes", !single.vanishes);

    PairScanReport below = length_two_scan(A, 0, 1, 0, 2, 0);
    report(out, "scan/below-threshold-flagged", !below.threshold_met);
    return out;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
    SuiteReport rep;
    rep.suite = name;
    rep.seed = cfg.seed;
    auto append = [&rep](std::vector<CaseResult> cases) {
        for (auto& c : cases) rep.cases.push_back(std::move(c));
    };
    if (name == "identity18" || name == "all") append(battery_identity18());
    if (name == "relations" || name == "all") {
        append(battery_pbw(cfg));
        append(battery_kashiwara(cfg));
    }
    if (name == "omega" || name == "all") {
        append(battery_omega_bounds());
        append(battery_omega_relations(cfg));
    }
    if (name == "form" || name == "all") {
        append(battery_form_basic(cfg));
        append(battery_form_gram());
    }
    if (name == "verma" || name == "all") {
        append(battery_verma_dichotomy());
        append(battery_verma_dualpath());
        append(battery_verma_scan());
    }
    if (rep.cases.empty())
        throw std::invalid_argument("unknown suite: " + name);
    for (const auto& c : rep.cases)
        if (!c.pass) rep.pass = false;
    return rep;
}

nlohmann::ordered_json suite_report_json(const SuiteReport& rep) {
    nlohmann::ordered_json failures = nlohmann::ordered_json::array();
    for (const auto& c : rep.cases) {
        if (c.pass) continue;
        failures.push_back({{"case", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}});
    }
    nlohmann::ordered_json caseNames = nlohmann::ordered_json::array();
    for (const auto& c : rep.cases) caseNames.push_back(c.name);
    return nlohmann::ordered_json{{"schemaVersion", 1},
                                  {"suite", rep.suite},
                                  {"seed", rep.seed},
                                  {"cases", rep.case_count()},
                                  {"caseNames", caseNames},
                                  {"failures", failures},
                                  {"pass", rep.pass}};
}

}  // namespace nqm
