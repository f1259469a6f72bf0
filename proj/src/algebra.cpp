#include "nqm/algebra.hpp"

#include <numeric>
#include <stdexcept>

namespace nqm {

Weight weight_of(const Monomial& m) {
    Weight w;
    w.length = static_cast<int>(m.size());
    w.deltaSum = std::accumulate(m.begin(), m.end(), 0);
    return w;
}

Element Element::term(Monomial m, Scalar c) {
    if (!is_normal(m)) throw std::invalid_argument("Element::term: monomial not in normal form");
    Element e;
    e.add_term(m, c);
    return e;
}

void Element::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Element& Element::operator+=(const Element& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Element Element::operator-() const {
    Element r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Element operator*(const Scalar& c, const Element& e) {
    Element r;
    if (c.is_zero()) return r;
    for (const auto& [m, t] : e.terms_) r.add_term(m, c * t);
    return r;
}

Element Element::specialize_gamma_one() const {
    Element r;
    for (const auto& [m, c] : terms_) r.add_term(m, c.specialize_gamma_one());
    return r;
}

bool Element::is_homogeneous(Weight* out) const {
    if (terms_.empty()) return true;
    Weight w = weight_of(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (!(weight_of(m) == w)) return false;
    if (out) *out = w;
    return true;
}

namespace {

std::vector<size_t> descent_positions(const Monomial& w) {
    std::vector<size_t> d;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) d.push_back(i);
    return d;
}

// One rewrite of the pair at position i; appends the replacement terms.
void rewrite_pair(const Monomial& w, size_t i, const Scalar& coeff,
                  std::vector<std::pair<Monomial, Scalar>>& out) {
    const int a = w[i], b = w[i + 1];
    const Scalar qm2 = Scalar::q_pow(-2);
    Monomial swapped = w;
    swapped[i] = b;
    swapped[i + 1] = a;
    out.emplace_back(std::move(swapped), coeff * qm2);
    if (a == b + 1) return;
    Monomial inner = w;
    inner[i] = a - 1;
    inner[i + 1] = b + 1;
    out.emplace_back(inner, coeff * qm2);
    std::swap(inner[i], inner[i + 1]);
    out.emplace_back(std::move(inner), -coeff);
}

}  // namespace

Element normal_form(const Monomial& word, const DescentPicker& pick) {
    Element done;
    std::map<Monomial, Scalar, MonomialLess> pending;
    if (is_normal(word)) {
        done.add_term(word, Scalar(1));
        return done;
    }
    pending.emplace(word, Scalar(1));
    while (!pending.empty()) {
        auto it = pending.begin();
        Monomial w = it->first;
        Scalar c = it->second;
        pending.erase(it);
        auto descents = descent_positions(w);
        size_t pos = pick(w, descents);
        std::vector<std::pair<Monomial, Scalar>> produced;
        rewrite_pair(w, pos, c, produced);
        for (auto& [m, k] : produced) {
            if (k.is_zero()) continue;
            if (is_normal(m)) {
                done.add_term(m, k);
            } else {
                auto [pit, inserted] = pending.emplace(std::move(m), k);
                if (!inserted) {
                    pit->second += k;
                    if (pit->second.is_zero()) pending.erase(pit);
                }
            }
        }
    }
    return done;
}

Element normal_form(const Monomial& word) {
    return normal_form(word, [](const Monomial&, const std::vector<size_t>& d) { return d.front(); });
}

Element normal_form(const Element& e) {
    Element r;
    for (const auto& [m, c] : e.terms()) r += c * normal_form(m);
    return r;
}

Element multiply(const Element& a, const Element& b) {
    Element r;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            Monomial w = ma;
            w.insert(w.end(), mb.begin(), mb.end());
            r += (ca * cb) * normal_form(w);
        }
    }
    return r;
}

namespace {

void enum_rec(int remaining, int target, int lo, int hi, Monomial& acc,
              std::vector<Monomial>& out) {
    if (remaining == 0) {
        if (target == 0) out.push_back(acc);
        return;
    }
    // Prune: remaining entries in [lo', hi] must be able to reach target.
    for (int v = lo; v <= hi; ++v) {
        int rest = remaining - 1;
        int minRest = target - v - rest * hi;
        int maxRest = target - v - rest * v;
        if (minRest > 0 || maxRest < 0) continue;
        acc.push_back(v);
        enum_rec(rest, target - v, v, hi, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Monomial> basis_enum(int length, int deltaSum, int lo, int hi) {
    if (length < 0) throw std::invalid_argument("basis_enum: negative length");
    if (lo > hi) throw std::invalid_argument("basis_enum: empty window");
    std::vector<Monomial> out;
    Monomial acc;
    enum_rec(length, deltaSum, lo, hi, acc, out);
    return out;
}

}  // namespace nqm
