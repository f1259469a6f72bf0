#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nqm {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact element of the Laurent ring Q[q^{1/2}, q^{-1/2}, gam^{1/2}, gam^{-1/2}].
///
/// A term is keyed by (qHalf, gammaHalf), counting half-steps of the exponent:
/// the key (a, b) stands for the monomial q^(a/2) * gam^(b/2).  Terms with a
/// zero coefficient are never stored, and iteration is always in ascending
/// (qHalf, gammaHalf) order; that order is part of the canonical text and
/// JSON contracts.
class Scalar {
public:
    using Key = std::pair<int, int>;  // (qHalf, gammaHalf)
    using TermMap = std::map<Key, Rational>;

    Scalar() = default;
    Scalar(long v) { insert_term(0, 0, Rational(v)); }
    Scalar(const Rational& v) { insert_term(0, 0, v); }

    static Scalar monomial(const Rational& coeff, int qHalf, int gammaHalf) {
        Scalar s;
        s.insert_term(qHalf, gammaHalf, coeff);
        return s;
    }
    /// q^(halfSteps/2)
    static Scalar q_pow_half(int halfSteps) { return monomial(1, halfSteps, 0); }
    /// q^e
    static Scalar q_pow(int e) { return q_pow_half(2 * e); }
    /// gam^(halfSteps/2)
    static Scalar gamma_pow_half(int halfSteps) { return monomial(1, 0, halfSteps); }
    /// gam^e
    static Scalar gamma_pow(int e) { return gamma_pow_half(2 * e); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == Key{0, 0} &&
               terms_.begin()->second == 1;
    }
    const TermMap& terms() const { return terms_; }

    Scalar& operator+=(const Scalar& o) {
        for (const auto& [k, c] : o.terms_) insert_term(k.first, k.second, c);
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        for (const auto& [k, c] : o.terms_) insert_term(k.first, k.second, -c);
        return *this;
    }
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    Scalar operator-() const {
        Scalar r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        Scalar r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.insert_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    bool operator<(const Scalar& o) const { return terms_ < o.terms_; }

    /// Substitute q -> q^{-1} (negate every qHalf exponent).
    Scalar bar_q() const {
        Scalar r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(Key{-k.first, k.second}, c);
        return r;
    }

    /// Substitute gam -> 1, folding all gamma exponents away.
    Scalar specialize_gamma_one() const {
        Scalar r;
        for (const auto& [k, c] : terms_) r.insert_term(k.first, 0, c);
        return r;
    }

    /// Evaluate at q = q0, gam = 1.  Every q exponent must be an integer
    /// (even qHalf); a surviving half-power means the value lives outside
    /// the rational field, and we refuse to approximate.
    Rational eval_q(const Rational& q0) const;

    /// Exact division: returns t with t * d == *this, or throws
    /// std::domain_error when no such Laurent element exists.
    Scalar div_exact(const Scalar& d) const;

    /// Canonical text rendering, e.g. "q^-2 + 1" or "3/2*q^(1/2)*gam^-1".
    std::string str() const;

private:
    void insert_term(int qHalf, int gammaHalf, const Rational& c) {
        if (c == 0) return;
        Key k{qHalf, gammaHalf};
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TermMap terms_;
};

inline Scalar operator*(const Rational& c, const Scalar& s) {
    return Scalar(c) * s;
}

/// q-integer [n] = (q^n - q^-n)/(q - q^-1) = q^(n-1) + q^(n-3) + ... + q^(1-n).
/// Antisymmetric in n; [0] = 0.
Scalar q_integer(int n);

enum class GSeries { plain, bar };

/// Coefficient of t^p in the expansion of (q^2 t - 1)/(t - q^2):
/// g(0) = q^-2 and g(p) = (1 - q^4) q^(-2p-2) for p > 0.  The bar variant
/// substitutes q -> q^{-1} and is the coefficientwise inverse series.
Scalar g_coeff(int p, GSeries variant = GSeries::plain);

/// Formal power series in z^{-1} over Scalar, truncated at a fixed order.
/// coefficient(j) is the coefficient of z^{-j}, 0 <= j <= order.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : coeffs_(static_cast<size_t>(order) + 1) {
        if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
    }
    static TruncatedSeries constant(int order, const Scalar& c) {
        TruncatedSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Scalar& coefficient(int j) const { return coeffs_.at(static_cast<size_t>(j)); }
    void set_coefficient(int j, const Scalar& c) { coeffs_.at(static_cast<size_t>(j)) = c; }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<Scalar> coeffs_;
};

/// exp of a series with zero constant term, exact through the series order.
/// Throws std::domain_error if the constant term is nonzero.
TruncatedSeries series_exp(const TruncatedSeries& s);

struct IdentityReport {
    bool equal = false;
    std::optional<int> first_mismatch;
    std::vector<Scalar> lhs;  // coefficient of z^-j on either side
    std::vector<Scalar> rhs;
};

/// Compares exp((q - q^-1) * sum_{k=1..N} (-[2k]/k) z^-k) with the closed
/// form 1 + (1 - q^4) * sum_{r=1..N} q^-2r z^-r, coefficient by coefficient
/// through order N.
IdentityReport exp_g_identity_check(int order);

}  // namespace nqm
