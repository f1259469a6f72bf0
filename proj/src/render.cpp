#include "nqm/render.hpp"

namespace nqm {

std::string render(const Scalar& s) { return s.str(); }

std::string render(const Monomial& m) {
    if (m.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < m.size(); ++i) {
        if (i) out += "*";
        out += "xm(" + std::to_string(m[i]) + ")";
    }
    return out;
}

namespace {

// Joins term pieces with " + " / " - ", folding a leading minus of the
// piece into the separator.
void join_term(std::string& out, bool& first, const std::string& piece) {
    if (first) {
        out = piece;
        first = false;
    } else if (!piece.empty() && piece[0] == '-') {
        out += " - " + piece.substr(1);
    } else {
        out += " + " + piece;
    }
}

std::string coeff_prefix(const Scalar& c) {
    if (c.is_one()) return "";
    const std::string cs = render(c);
    if (c.terms().size() > 1) return "(" + cs + ")*";
    return cs + "*";
}

}  // namespace

std::string render(const Element& e) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : e.terms()) {
        std::string piece;
        if (m.empty()) {
            piece = render(c);
            if (c.terms().size() > 1 && !first) piece = "(" + piece + ")";
        } else {
            piece = coeff_prefix(c) + render(m);
        }
        join_term(out, first, piece);
    }
    return out;
}

std::string render(const KWord& w) {
    if (w.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += "*";
        switch (w[i].kind) {
            case KGen::Kind::XMinus: out += "xm(" + std::to_string(w[i].idx) + ")"; break;
            case KGen::Kind::OmegaPsi: out += "Wpsi(" + std::to_string(w[i].idx) + ")"; break;
            case KGen::Kind::GammaHalf: out += "gam(" + std::to_string(w[i].idx) + "/2)"; break;
        }
    }
    return out;
}

std::string render(const KElement& e) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : e.terms()) {
        std::string piece;
        if (w.empty()) {
            piece = render(c);
            if (c.terms().size() > 1 && !first) piece = "(" + piece + ")";
        } else {
            piece = coeff_prefix(c) + render(w);
        }
        join_term(out, first, piece);
    }
    return out;
}

Json to_json(const Scalar& s) {
    Json terms = Json::array();
    for (const auto& [k, c] : s.terms()) {
        terms.push_back(Json::array({k.first, k.second,
                                     c.get_num().get_str(), c.get_den().get_str()}));
    }
    return Json{{"terms", terms}};
}

Json to_json(const Element& e) {
    Json terms = Json::array();
    for (const auto& [m, c] : e.terms()) {
        terms.push_back(Json{{"modes", m}, {"coeff", to_json(c)}});
    }
    return Json{{"terms", terms}};
}

Json to_json(const KElement& e) {
    Json terms = Json::array();
    for (const auto& [w, c] : e.terms()) {
        Json word = Json::array();
        for (const auto& g : w) {
            const char* name = g.kind == KGen::Kind::XMinus     ? "xm"
                               : g.kind == KGen::Kind::OmegaPsi ? "Wpsi"
                                                                : "gam";
            word.push_back(Json{{"g", name}, {"i", g.idx}});
        }
        terms.push_back(Json{{"word", word}, {"coeff", to_json(c)}});
    }
    return Json{{"terms", terms}};
}

}  // namespace nqm
