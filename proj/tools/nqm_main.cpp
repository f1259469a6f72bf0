#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "nqm/form.hpp"
#include "nqm/kashiwara.hpp"
#include "nqm/omega.hpp"
#include "nqm/parser.hpp"
#include "nqm/render.hpp"
#include "nqm/suite.hpp"
#include "nqm/verma.hpp"

namespace {

using nqm::Json;

struct WindowArg {
    int lo = 0, hi = 0;
};

WindowArg parse_window(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos)
        throw std::invalid_argument("window must have the form a..b");
    WindowArg w;
    w.lo = std::stoi(s.substr(0, dots));
    w.hi = std::stoi(s.substr(dots + 2));
    if (w.lo > w.hi) throw std::invalid_argument("window must have lo <= hi");
    return w;
}

std::vector<nqm::Rational> parse_rational_list(const std::string& s) {
    std::vector<nqm::Rational> out;
    size_t start = 0;
    while (start <= s.size()) {
        size_t comma = s.find(',', start);
        std::string item = s.substr(start, comma == std::string::npos ? comma : comma - start);
        if (!item.empty()) {
            nqm::Rational r(item);
            r.canonicalize();
            out.push_back(r);
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("empty rational list");
    return out;
}

void emit(const std::string& format, const std::string& text, const Json& json) {
    if (format == "json")
        std::cout << json.dump(2) << "\n";
    else
        std::cout << text << "\n";
}

Json wrap_result(const Json& result) {
    return Json{{"schemaVersion", 1}, {"result", result}};
}

int run(int argc, char** argv) {
    CLI::App app{"exact computations in the negative current algebra, its Kashiwara operator algebra, the invariant bilinear form, and level-zero reduced highest-weight modules"};
    app.require_subcommand(1);
    app.fallthrough();
    int exitCode = 0;

    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    // ---- normal-form ----------------------------------------------------
    std::string nfExpr;
    auto* nf = app.add_subcommand("normal-form", "rewrite an expression to the ordered basis");
    nf->add_option("--expr", nfExpr, "element expression")->required();
    nf->callback([&] {
        nqm::Element e = nqm::parse_element(nfExpr);
        emit(format, nqm::render(e), wrap_result(nqm::to_json(e)));
    });

    // ---- multiply --------------------------------------------------------
    std::string mulLhs, mulRhs;
    auto* mul = app.add_subcommand("multiply", "algebra product of two elements");
    mul->add_option("--lhs", mulLhs)->required();
    mul->add_option("--rhs", mulRhs)->required();
    mul->callback([&] {
        nqm::Element e = nqm::multiply(nqm::parse_element(mulLhs), nqm::parse_element(mulRhs));
        emit(format, nqm::render(e), wrap_result(nqm::to_json(e)));
    });

    // ---- omega -----------------------------------------------------------
    std::string omKind;
    int omK = 0;
    std::string omExpr;
    auto* om = app.add_subcommand("omega", "apply an annihilation operator component");
    om->add_option("--kind", omKind)->required()->check(CLI::IsMember({"psi", "phi"}));
    om->add_option("--k", omK)->required();
    om->add_option("--expr", omExpr)->required();
    om->callback([&] {
        nqm::Element e = nqm::omega_apply(
            omKind == "psi" ? nqm::OmegaKind::psi : nqm::OmegaKind::phi, omK,
            nqm::parse_element(omExpr));
        emit(format, nqm::render(e), wrap_result(nqm::to_json(e)));
    });

    // ---- kact ------------------------------------------------------------
    std::string kactWord, kactExpr;
    auto* ka = app.add_subcommand("kact", "act by an operator word on an element");
    ka->add_option("--word", kactWord)->required();
    ka->add_option("--expr", kactExpr)->required();
    ka->callback([&] {
        nqm::Element e = nqm::k_act(nqm::parse_kelement(kactWord), nqm::parse_element(kactExpr));
        emit(format, nqm::render(e), wrap_result(nqm::to_json(e)));
    });

    // ---- alphabar ----------------------------------------------------------
    std::string abWord;
    auto* ab = app.add_subcommand("alphabar", "apply the involutive anti-automorphism to a word");
    ab->add_option("--word", abWord)->required();
    ab->callback([&] {
        nqm::KElement e = nqm::alpha_bar(nqm::parse_kelement(abWord));
        emit(format, nqm::render(e), wrap_result(nqm::to_json(e)));
    });

    // ---- pair --------------------------------------------------------------
    std::string pairLhs, pairRhs;
    auto* pr = app.add_subcommand("pair", "evaluate the invariant bilinear form");
    pr->add_option("--lhs", pairLhs)->required();
    pr->add_option("--rhs", pairRhs)->required();
    pr->callback([&] {
        nqm::Scalar v =
            nqm::bilinear_pair(nqm::parse_element(pairLhs), nqm::parse_element(pairRhs));
        emit(format, nqm::render(v), wrap_result(nqm::to_json(v)));
    });

    // ---- gram ----------------------------------------------------------------
    int gLen = 0, gDsum = 0;
    std::string gWindow = "-2..2";
    bool gRank = false;
    std::string gPoints = "7/5,11/3";
    auto* gr = app.add_subcommand("gram", "Gram matrix of the form on a truncated weight space");
    gr->add_option("--length", gLen)->required();
    gr->add_option("--dsum", gDsum)->required();
    gr->add_option("--window", gWindow);
    gr->add_flag("--rank", gRank, "add determinant / rank report");
    gr->add_option("--eval-points", gPoints, "comma-separated rational q sample points");
    gr->callback([&] {
        WindowArg w = parse_window(gWindow);
        nqm::GramMatrix g = nqm::gram(gLen, gDsum, w.lo, w.hi);
        std::string text = "gram length=" + std::to_string(gLen) +
                           " dsum=" + std::to_string(gDsum) + " window=" + gWindow + "\n";
        Json basis = Json::array();
        for (size_t i = 0; i < g.basis.size(); ++i) {
            text += "basis " + std::to_string(i) + ": " + nqm::render(g.basis[i]) + "\n";
            basis.push_back(g.basis[i]);
        }
        Json entries = Json::array();
        for (size_t i = 0; i < g.basis.size(); ++i) {
            Json row = Json::array();
            for (size_t j = 0; j < g.basis.size(); ++j) {
                text += "[" + std::to_string(i) + "][" + std::to_string(j) + "] = " +
                        nqm::render(g.entries[i][j]) + "\n";
                row.push_back(nqm::to_json(g.entries[i][j]));
            }
            entries.push_back(row);
        }
        Json j{{"schemaVersion", 1}, {"length", gLen},   {"dsum", gDsum},
               {"window", Json::array({w.lo, w.hi})},    {"basis", basis},
               {"entries", entries}};
        if (gRank) {
            nqm::GramRankReport rep = nqm::gram_rank_report(g, parse_rational_list(gPoints));
            if (rep.det) {
                text += "det = " + nqm::render(*rep.det) + "\n";
                j["det"] = nqm::to_json(*rep.det);
                j["symbolicDetNonzero"] = *rep.symbolic_det_nonzero;
            } else {
                text += rep.note + "\n";
                j["note"] = rep.note;
            }
            Json ranks = Json::array();
            for (const auto& [p, r] : rep.point_ranks) {
                text += "rank at q=" + p.get_str() + ", gam=1: " + std::to_string(r) + "\n";
                ranks.push_back(Json{{"q", p.get_str()}, {"rank", r}});
            }
            j["ranks"] = ranks;
        }
        if (!text.empty() && text.back() == '\n') text.pop_back();
        emit(format, text, j);
    });

    // ---- verma ------------------------------------------------------------------
    auto* verma = app.add_subcommand("verma", "level-zero reduced module operations");
    verma->require_subcommand(1);

    std::string vOp, vExpr;
    int vIdx = 0, vLambda = 0;
    auto* vact = verma->add_subcommand("act", "apply a module operator");
    vact->add_option("--op", vOp)->required()
        ->check(CLI::IsMember({"xplus", "xminus", "a", "psi", "phi", "K"}));
    vact->add_option("--idx", vIdx, "operator index (ignored for K)");
    vact->add_option("--lambda-h", vLambda)->required();
    vact->add_option("--expr", vExpr, "payload element applied to the highest-weight vector")
        ->required();
    vact->callback([&] {
        nqm::VermaElement v(vLambda, nqm::parse_element(vExpr));
        nqm::VermaElement r;
        if (vOp == "xplus") r = nqm::act_xplus(vIdx, v);
        else if (vOp == "xminus") r = nqm::act_xminus(vIdx, v);
        else if (vOp == "a") r = nqm::act_a(vIdx, v);
        else if (vOp == "psi") r = nqm::act_psi(vIdx, v);
        else if (vOp == "phi") r = nqm::act_phi(vIdx, v);
        else r = nqm::act_K(v);
        emit(format, nqm::render(r.payload()),
             Json{{"schemaVersion", 1}, {"lambdaH", vLambda}, {"payload", nqm::to_json(r.payload())}});
    });

    int vsLambda = 0, vsLen = 1, vsDsum = 0;
    std::string vsWindow = "-2..2";
    auto* vsing = verma->add_subcommand("singular", "search a truncated weight space for singular vectors");
    vsing->add_option("--lambda-h", vsLambda)->required();
    vsing->add_option("--length", vsLen)->required();
    vsing->add_option("--dsum", vsDsum)->required();
    vsing->add_option("--window", vsWindow);
    vsing->callback([&] {
        WindowArg w = parse_window(vsWindow);
        nqm::SingularReport rep = nqm::singular_probe(vsLambda, vsLen, vsDsum, w.lo, w.hi);
        std::string text = "singular probe lambda_h=" + std::to_string(vsLambda) +
                           " length=" + std::to_string(vsLen) + " dsum=" + std::to_string(vsDsum) +
                           " window=" + vsWindow + "\n" +
                           "basis size " + std::to_string(rep.basis.size()) + ", s range [" +
                           std::to_string(rep.sLo) + "," + std::to_string(rep.sHi) + "]\n";
        if (rep.symbolic_rank)
            text += "symbolic rank " + std::to_string(*rep.symbolic_rank) + "\n";
        for (const auto& [p, r] : rep.point_ranks)
            text += "rank at q=" + p.get_str() + ": " + std::to_string(r) + "\n";
        text += "kernel dimension " + std::to_string(rep.kernel_dim) + "\n";
        for (const auto& c : rep.certified) text += "certified singular for all s: " + c + "\n";
        text += std::string("stationarity spot checks: ") + (rep.stationarity_ok ? "ok" : "FAILED");
        Json certified = Json::array();
        for (const auto& c : rep.certified) certified.push_back(c);
        Json ranks = Json::array();
        for (const auto& [p, r] : rep.point_ranks)
            ranks.push_back(Json{{"q", p.get_str()}, {"rank", r}});
        Json j{{"schemaVersion", 1},
               {"lambdaH", vsLambda},
               {"length", vsLen},
               {"dsum", vsDsum},
               {"window", Json::array({w.lo, w.hi})},
               {"basisSize", rep.basis.size()},
               {"sRange", Json::array({rep.sLo, rep.sHi})},
               {"symbolicRank", rep.symbolic_rank ? Json(*rep.symbolic_rank) : Json(nullptr)},
               {"ranks", ranks},
               {"kernelDim", rep.kernel_dim},
               {"certified", certified},
               {"stationarityOk", rep.stationarity_ok}};
        emit(format, text, j);
    });

    std::string l2A = "1,-1";
    int l2Start = 0, l2M = 1, l2From = 3, l2To = 8, l2Lambda = 0;
    auto* vlem = verma->add_subcommand("lemma62", "scan the length-two annihilation constraint");
    vlem->add_option("--A", l2A, "comma-separated rational coefficients")->required();
    vlem->add_option("--l-start", l2Start, "l index of the first coefficient");
    vlem->add_option("--m", l2M)->required();
    vlem->add_option("--s-from", l2From)->required();
    vlem->add_option("--s-to", l2To)->required();
    vlem->add_option("--lambda-h", l2Lambda);
    vlem->callback([&] {
        nqm::PairScanReport rep =
            nqm::length_two_scan(parse_rational_list(l2A), l2Start, l2M, l2From, l2To, l2Lambda);
        std::string text = "scan m=" + std::to_string(rep.m) + " l0=" + std::to_string(rep.lStart) +
                           " s=[" + std::to_string(rep.sFrom) + "," + std::to_string(rep.sTo) +
                           "] threshold=" + std::to_string(rep.threshold) + "\n";
        Json weights = Json::array();
        if (!rep.threshold_met) {
            text += "threshold not met";
        } else {
            text += std::string("images single monomial: ") + (rep.images_monomial ? "yes" : "NO") +
                    "\n";
            text += std::string("weights s-independent: ") + (rep.s_independent ? "yes" : "NO") + "\n";
            for (size_t i = 0; i < rep.weights.size(); ++i) {
                text += "w[l=" + std::to_string(rep.lStart + static_cast<int>(i)) +
                        "] = " + nqm::render(rep.weights[i]) + "\n";
                weights.push_back(nqm::render(rep.weights[i]));
            }
            text += "constraint value = " + nqm::render(rep.constraint_value) + "\n";
            text += std::string("vanishes: ") + (rep.vanishes ? "yes" : "no");
        }
        Json j{{"schemaVersion", 1},
               {"m", rep.m},
               {"lStart", rep.lStart},
               {"sRange", Json::array({rep.sFrom, rep.sTo})},
               {"threshold", rep.threshold},
               {"thresholdMet", rep.threshold_met},
               {"imagesMonomial", rep.images_monomial},
               {"sIndependent", rep.s_independent},
               {"weights", weights},
               {"constraintValue", nqm::render(rep.constraint_value)},
               {"vanishes", rep.vanishes}};
        emit(format, text, j);
    });

    // ---- check -------------------------------------------------------------------
    auto* check = app.add_subcommand("check", "relation and identity checks");
    check->require_subcommand(1);

    std::string crSuite = "omega", crRel = "eq28";
    int crSamples = 200, crLenMax = 3;
    std::uint64_t crSeed = 42;
    std::string crModeWindow = "-3..3", crIdxWindow = "-4..4";
    auto* crel = check->add_subcommand("relations", "verify a commutation relation on random elements");
    crel->add_option("--suite", crSuite)->check(CLI::IsMember({"omega", "kashiwara"}));
    crel->add_option("--rel", crRel)->required();
    crel->add_option("--samples", crSamples);
    crel->add_option("--seed", crSeed);
    crel->add_option("--len-max", crLenMax);
    crel->add_option("--mode-window", crModeWindow);
    crel->add_option("--idx-window", crIdxWindow);
    crel->callback([&] {
        WindowArg mw = parse_window(crModeWindow);
        WindowArg iw = parse_window(crIdxWindow);
        nqm::SampleSpec spec;
        spec.lenMax = crLenMax;
        spec.modeLo = mw.lo;
        spec.modeHi = mw.hi;
        spec.idxLo = iw.lo;
        spec.idxHi = iw.hi;
        spec.samples = crSamples;
        spec.seed = crSeed;
        nqm::RelationReport rep;
        if (crSuite == "omega") {
            auto rel = nqm::omega_rel_from_name(crRel);
            if (!rel) throw std::invalid_argument("unknown omega relation: " + crRel);
            rep = nqm::check_omega_relation(*rel, spec);
        } else {
            auto rel = nqm::kashiwara_rel_from_name(crRel);
            if (!rel) throw std::invalid_argument("unknown kashiwara relation: " + crRel);
            rep = nqm::check_kashiwara_relation(*rel, spec);
        }
        std::string text = crSuite + "/" + rep.rel + ": " + (rep.pass ? "PASS" : "FAIL") + " (" +
                           std::to_string(rep.cases) + " cases)";
        if (rep.first_failure) text += "\nfirst failure: " + rep.first_failure->what;
        Json j{{"schemaVersion", 1}, {"suite", crSuite},      {"rel", rep.rel},
               {"cases", rep.cases}, {"pass", rep.pass}};
        if (rep.first_failure)
            j["firstFailure"] = Json{{"case", rep.first_failure->what},
                                     {"lhs", rep.first_failure->lhs},
                                     {"rhs", rep.first_failure->rhs}};
        emit(format, text, j);
        if (!rep.pass) exitCode = 3;
    });

    int ciOrder = 12;
    auto* cid = check->add_subcommand("identity18", "exp-series identity through a truncation order");
    cid->add_option("--order", ciOrder);
    cid->callback([&] {
        nqm::IdentityReport rep = nqm::exp_g_identity_check(ciOrder);
        std::string text = "identity18 order " + std::to_string(ciOrder) + ": " +
                           (rep.equal ? "PASS" : "FAIL");
        Json j{{"schemaVersion", 1},
               {"order", ciOrder},
               {"equal", rep.equal},
               {"firstMismatch", rep.first_mismatch ? Json(*rep.first_mismatch) : Json(nullptr)}};
        emit(format, text, j);
        if (!rep.equal) exitCode = 3;
    });

    // ---- suite -------------------------------------------------------------------
    std::string suName = "all";
    std::uint64_t suSeed = 42;
    auto* su = app.add_subcommand("suite", "run a named verification battery");
    su->add_option("--name", suName)
        ->check(CLI::IsMember({"relations", "omega", "form", "verma", "identity18", "all"}));
    su->add_option("--seed", suSeed);
    su->callback([&] {
        nqm::SuiteConfig cfg = nqm::SuiteConfig::from_env(suSeed);
        nqm::SuiteReport rep = nqm::run_suite(suName, cfg);
        // The suite report is machine-facing: JSON unless text was asked for.
        const std::string fmt = app.count("--format") ? format : "json";
        if (fmt == "text") {
            std::string text;
            for (const auto& c : rep.cases)
                text += (c.pass ? "PASS " : "FAIL ") + c.name + "\n";
            text += rep.pass ? "suite " + suName + ": PASS" : "suite " + suName + ": FAIL";
            std::cout << text << "\n";
        } else {
            std::cout << nqm::suite_report_json(rep).dump(2) << "\n";
        }
        if (!rep.pass) exitCode = 3;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return exitCode;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const nqm::SyntaxError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
