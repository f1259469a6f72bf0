#include "nqm/verma.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "nqm/linalg.hpp"
#include "nqm/render.hpp"

namespace nqm {

VermaElement operator+(const VermaElement& a, const VermaElement& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.lambdaH_ != b.lambdaH_)
        throw std::invalid_argument("VermaElement: mixing different highest weights");
    return VermaElement(a.lambdaH_, a.payload_ + b.payload_);
}

VermaElement operator-(const VermaElement& a, const VermaElement& b) {
    return a + Scalar(-1) * b;
}

VermaElement act_xminus(int n, const VermaElement& v) {
    return VermaElement(v.lambda_h(), multiply(Element::x_minus(n), v.payload()));
}

VermaElement act_a(int k, const VermaElement& v) {
    if (k == 0) throw std::invalid_argument("act_a: index must be nonzero");
    Rational ratio(-1, k);
    ratio.canonicalize();
    const Scalar coeff = ratio * q_integer(2 * k);
    Element out;
    for (const auto& [m, c] : v.payload().terms()) {
        for (size_t i = 0; i < m.size(); ++i) {
            Monomial shifted = m;
            shifted[i] += k;
            out += (c * coeff) * normal_form(shifted);
        }
    }
    return VermaElement(v.lambda_h(), out);
}

VermaElement act_K(const VermaElement& v) {
    Element out;
    for (const auto& [m, c] : v.payload().terms())
        out.add_term(m, c * Scalar::q_pow(v.lambda_h() - 2 * static_cast<int>(m.size())));
    return VermaElement(v.lambda_h(), out);
}

namespace {

Element psi_mono(int j, const Monomial& m, int lambdaH) {
    if (j < 0) return Element::zero();
    if (m.empty())
        return j == 0 ? Scalar::q_pow(lambdaH) * Element::unit() : Element::zero();
    const int head = m.front();
    Monomial rest(m.begin() + 1, m.end());
    Element out;
    for (int r = 0; r <= j; ++r) {
        Element sub = psi_mono(j - r, rest, lambdaH);
        if (sub.is_zero()) continue;
        out += g_coeff(r, GSeries::plain).specialize_gamma_one() *
               multiply(Element::x_minus(head + r), sub);
    }
    return out;
}

Element phi_mono(int j, const Monomial& m, int lambdaH) {
    if (j > 0) return Element::zero();
    if (m.empty())
        return j == 0 ? Scalar::q_pow(-lambdaH) * Element::unit() : Element::zero();
    const int head = m.front();
    Monomial rest(m.begin() + 1, m.end());
    Element out;
    for (int r = 0; r <= -j; ++r) {
        Element sub = phi_mono(j + r, rest, lambdaH);
        if (sub.is_zero()) continue;
        out += g_coeff(r, GSeries::bar).specialize_gamma_one() *
               multiply(Element::x_minus(head - r), sub);
    }
    return out;
}

const Scalar& q_minus_qinv() {
    static const Scalar s = Scalar::q_pow(1) - Scalar::q_pow(-1);
    return s;
}

// (psi(j) - phi(j)) / (q - q^-1) applied to a payload monomial.
Element xi_mono(int j, const Monomial& m, int lambdaH) {
    Element num = psi_mono(j, m, lambdaH) - phi_mono(j, m, lambdaH);
    Element out;
    for (const auto& [mono, c] : num.terms())
        out.add_term(mono, c.div_exact(q_minus_qinv()));
    return out;
}

Element xplus_mono(int s, const Monomial& m, int lambdaH) {
    if (m.empty()) return Element::zero();
    const int head = m.front();
    Monomial rest(m.begin() + 1, m.end());
    Element out = xi_mono(s + head, rest, lambdaH);
    Element deeper = xplus_mono(s, rest, lambdaH);
    if (!deeper.is_zero()) out += multiply(Element::x_minus(head), deeper);
    return out;
}

void compositions_rec(int remaining, std::vector<int>& acc,
                      std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(acc);
        return;
    }
    for (int part = 1; part <= remaining; ++part) {
        acc.push_back(part);
        compositions_rec(remaining - part, acc, out);
        acc.pop_back();
    }
}

}  // namespace

VermaElement act_psi(int j, const VermaElement& v) {
    Element out;
    for (const auto& [m, c] : v.payload().terms()) out += c * psi_mono(j, m, v.lambda_h());
    return VermaElement(v.lambda_h(), out);
}

VermaElement act_phi(int j, const VermaElement& v) {
    Element out;
    for (const auto& [m, c] : v.payload().terms()) out += c * phi_mono(j, m, v.lambda_h());
    return VermaElement(v.lambda_h(), out);
}

VermaElement act_xplus(int s, const VermaElement& v) {
    Element out;
    for (const auto& [m, c] : v.payload().terms()) out += c * xplus_mono(s, m, v.lambda_h());
    return VermaElement(v.lambda_h(), out);
}

VermaElement psi_expansion_oracle(int j, const VermaElement& v) {
    if (j <= 0) throw std::invalid_argument("psi_expansion_oracle: index must be positive");
    std::vector<std::vector<int>> comps;
    std::vector<int> acc;
    compositions_rec(j, acc, comps);
    VermaElement sum(v.lambda_h(), Element::zero());
    for (const auto& comp : comps) {
        VermaElement t = v;
        for (auto it = comp.rbegin(); it != comp.rend(); ++it) t = act_a(*it, t);
        Scalar w(1);
        Rational fact(1);
        for (size_t i = 0; i < comp.size(); ++i) {
            w *= q_minus_qinv();
            fact *= static_cast<long>(i + 1);
        }
        sum = sum + (Rational(1) / fact * w) * t;
    }
    return act_K(sum);
}

namespace {

struct ConstraintMatrix {
    // One row per image monomial of one s value; columns are basis vectors.
    std::vector<std::vector<Scalar>> rows;

    void add_images(const std::vector<Element>& images) {
        std::map<Monomial, size_t, MonomialLess> rowOf;
        for (size_t i = 0; i < images.size(); ++i) {
            for (const auto& [mono, c] : images[i].terms()) {
                auto [it, inserted] = rowOf.emplace(mono, rows.size());
                if (inserted) rows.emplace_back(images.size(), Scalar());
                rows[it->second][i] = c;
            }
        }
    }
};

std::vector<Element> images_at(int s, const std::vector<Monomial>& basis, int lambdaH) {
    std::vector<Element> imgs;
    imgs.reserve(basis.size());
    for (const auto& b : basis)
        imgs.push_back(act_xplus(s, VermaElement(lambdaH, Element::term(b, Scalar(1)))).payload());
    return imgs;
}

int point_rank(const std::vector<std::vector<Scalar>>& rows, const Rational& q0) {
    std::vector<std::vector<Rational>> m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<Rational> row;
        row.reserve(r.size());
        for (const auto& e : r) row.push_back(e.eval_q(q0));
        m.push_back(std::move(row));
    }
    return bareiss_rank(std::move(m));
}

}  // namespace

SingularReport singular_probe(int lambdaH, int length, int deltaSum, int lo, int hi) {
    if (length < 1) throw std::invalid_argument("singular_probe: length must be >= 1");
    SingularReport rep;
    rep.lambdaH = lambdaH;
    rep.length = length;
    rep.deltaSum = deltaSum;
    rep.lo = lo;
    rep.hi = hi;
    rep.basis = basis_enum(length, deltaSum, lo, hi);
    const int span = hi - lo;
    rep.sLo = -hi - length * span - 2;
    rep.sHi = -lo + length * span + 2;
    if (rep.basis.empty()) {
        rep.note = "empty truncated weight space";
        return rep;
    }

    ConstraintMatrix cm;
    for (int s = rep.sLo; s <= rep.sHi; ++s) cm.add_images(images_at(s, rep.basis, lambdaH));

    const std::vector<Rational> pts{Rational(7, 5), Rational(11, 3)};
    for (const auto& p : pts) rep.point_ranks.emplace_back(p, point_rank(cm.rows, p));
    if (length <= 2) rep.symbolic_rank = bareiss_rank(cm.rows);

    int bestRank = 0;
    for (const auto& [p, r] : rep.point_ranks) bestRank = std::max(bestRank, r);
    if (rep.symbolic_rank) bestRank = *rep.symbolic_rank;
    rep.kernel_dim = static_cast<int>(rep.basis.size()) - bestRank;

    // Stationarity spot checks: three extra s beyond each end of the range
    // must not increase the rank.
    ConstraintMatrix ext = cm;
    for (int d = 1; d <= 3; ++d) {
        ext.add_images(images_at(rep.sHi + d, rep.basis, lambdaH));
        ext.add_images(images_at(rep.sLo - d, rep.basis, lambdaH));
    }
    for (const auto& p : pts)
        if (point_rank(ext.rows, p) != point_rank(cm.rows, p)) rep.stationarity_ok = false;
    if (rep.symbolic_rank && bareiss_rank(ext.rows) != *rep.symbolic_rank)
        rep.stationarity_ok = false;

    // Exact all-s certification for length-1 kernel vectors: the insertion
    // (psi(s+m) - phi(s+m))/(q - q^-1) on v vanishes for every s except
    // s = -m, where it is the q-integer of lambdaH.  So x^-(m) v is singular
    // for ALL integer s exactly when that q-integer vanishes.
    if (length == 1 && q_integer(lambdaH).is_zero()) {
        for (const auto& b : rep.basis) {
            VermaElement img = act_xplus(-b[0], VermaElement(lambdaH, Element::term(b, Scalar(1))));
            if (img.is_zero())
                rep.certified.push_back(render(Element::term(b, Scalar(1))));
        }
    }
    return rep;
}

PairScanReport length_two_scan(const std::vector<Rational>& A, int lStart, int m,
                               int sFrom, int sTo, int lambdaH) {
    if (A.empty()) throw std::invalid_argument("length_two_scan: empty coefficient list");
    if (sFrom > sTo) throw std::invalid_argument("length_two_scan: empty s range");
    PairScanReport rep;
    rep.m = m;
    rep.lStart = lStart;
    rep.coeffs = A;
    rep.sFrom = sFrom;
    rep.sTo = sTo;
    rep.lambdaH = lambdaH;

    // Basis vector for index l is the word x^-(l) x^-(m-l), normalized.
    std::vector<Element> basis;
    int minMode = 0;
    bool haveMin = false;
    for (size_t i = 0; i < A.size(); ++i) {
        const int l = lStart + static_cast<int>(i);
        basis.push_back(normal_form(Monomial{l, m - l}));
        const int lowest = std::min(l, m - l);
        if (!haveMin || lowest < minMode) {
            minMode = lowest;
            haveMin = true;
        }
    }
    rep.threshold = 1 - minMode;
    rep.threshold_met = sFrom >= rep.threshold;
    if (!rep.threshold_met) {
        rep.note = "threshold not met: transient delta/phi terms may remain below s = " +
                   std::to_string(rep.threshold);
        return rep;
    }

    rep.images_monomial = true;
    rep.s_independent = true;
    std::vector<Scalar> firstWeights;
    for (int s = sFrom; s <= sTo; ++s) {
        const Monomial target{m + s};
        std::vector<Scalar> c(A.size());
        for (size_t i = 0; i < A.size(); ++i) {
            Element img = act_xplus(s, VermaElement(lambdaH, basis[i])).payload();
            for (const auto& [mono, coeff] : img.terms()) {
                if (mono == target) {
                    c[i] = coeff;
                } else {
                    rep.images_monomial = false;
                }
            }
        }
        // Normalize by the first nonzero coefficient; in the pure regime the
        // ratios are Laurent monomials.
        size_t pivot = 0;
        while (pivot < c.size() && c[pivot].is_zero()) ++pivot;
        std::vector<Scalar> w(c.size());
        if (pivot < c.size())
            for (size_t i = 0; i < c.size(); ++i) w[i] = c[i].div_exact(c[pivot]);
        if (s == sFrom) {
            firstWeights = w;
            rep.weights = w;
        } else if (w != firstWeights) {
            rep.s_independent = false;
        }
    }

    Scalar value;
    for (size_t i = 0; i < A.size(); ++i) value += A[i] * rep.weights[i];
    rep.constraint_value = value;
    rep.vanishes = value.is_zero();
    return rep;
}

}  // namespace nqm
