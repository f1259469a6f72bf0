#include "nqm/form.hpp"

#include "nqm/linalg.hpp"
#include "nqm/omega.hpp"

namespace nqm {

namespace {

// (monomial, element): peel the least mode through the adjunction.
Scalar pair_monomial(const Monomial& a, const Element& b) {
    if (a.empty()) {
        // (1, .) picks out the unit component.
        auto it = b.terms().find(Monomial{});
        return it == b.terms().end() ? Scalar() : it->second;
    }
    Monomial rest(a.begin() + 1, a.end());
    return pair_monomial(rest, omega_psi(-a.front(), b));
}

}  // namespace

Scalar bilinear_pair(const Element& a, const Element& b) {
    Scalar out;
    for (const auto& [m, c] : a.terms()) out += c * pair_monomial(m, b);
    return out;
}

GramMatrix gram(int length, int deltaSum, int lo, int hi) {
    GramMatrix g;
    g.length = length;
    g.deltaSum = deltaSum;
    g.lo = lo;
    g.hi = hi;
    g.basis = basis_enum(length, deltaSum, lo, hi);
    const size_t n = g.basis.size();
    g.entries.assign(n, std::vector<Scalar>(n));
    for (size_t i = 0; i < n; ++i) {
        Element ei = Element::term(g.basis[i], Scalar(1));
        for (size_t j = i; j < n; ++j) {
            Element ej = Element::term(g.basis[j], Scalar(1));
            Scalar v = bilinear_pair(ei, ej);
            g.entries[i][j] = v;
            g.entries[j][i] = v;
        }
    }
    return g;
}

GramRankReport gram_rank_report(const GramMatrix& g, const std::vector<Rational>& evalPoints) {
    GramRankReport rep;
    for (const auto& p : evalPoints) {
        if (p == 0 || p == 1 || p == -1)
            throw std::invalid_argument("gram_rank_report: |point| in {0,1} is a degenerate specialization");
    }
    const size_t n = g.basis.size();
    if (n <= 6) {
        Scalar det = cofactor_det(g.entries);
        rep.det = det;
        rep.symbolic_det_nonzero = !det.is_zero();
    } else {
        rep.note = "symbolic determinant skipped (matrix larger than 6x6)";
    }
    for (const auto& p : evalPoints) {
        std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) m[i][j] = g.entries[i][j].eval_q(p);
        rep.point_ranks.emplace_back(p, bareiss_rank(std::move(m)));
    }
    return rep;
}

}  // namespace nqm
