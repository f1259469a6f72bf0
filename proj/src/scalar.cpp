#include "nqm/scalar.hpp"

#include <sstream>

namespace nqm {

namespace {

Rational rational_pow(const Rational& base, int e) {
    if (e == 0) return Rational(1);
    Rational b = base;
    if (e < 0) {
        if (b == 0) throw std::domain_error("eval_q: q = 0 with negative exponent");
        b = Rational(1) / b;
        e = -e;
    }
    Rational r(1);
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

std::string exponent_str(int halfSteps) {
    if (halfSteps % 2 == 0) return std::to_string(halfSteps / 2);
    return "(" + std::to_string(halfSteps) + "/2)";
}

}  // namespace

Rational Scalar::eval_q(const Rational& q0) const {
    Rational v(0);
    for (const auto& [k, c] : specialize_gamma_one().terms_) {
        if (k.first % 2 != 0)
            throw std::domain_error("eval_q: half-integer q exponent has no rational value");
        v += c * rational_pow(q0, k.first / 2);
    }
    return v;
}

Scalar Scalar::div_exact(const Scalar& d) const {
    if (d.is_zero()) throw std::domain_error("div_exact: division by zero");
    if (is_zero()) return Scalar();
    // Shift both operands into the ordinary polynomial range, then do
    // lex-leading-term long division there.  Exact division keeps the
    // remainder equal to (pending quotient) * divisor, so the leading
    // monomial of the divisor always divides the remainder's; when it does
    // not, the quotient is not a Laurent element.
    auto min_exps = [](const TermMap& t) {
        Key m = t.begin()->first;
        for (const auto& [k, c] : t) {
            m.first = std::min(m.first, k.first);
            m.second = std::min(m.second, k.second);
        }
        return m;
    };
    auto shifted = [](const TermMap& t, int dq, int dg) {
        Scalar r;
        for (const auto& [k, c] : t) r.terms_.emplace(Key{k.first + dq, k.second + dg}, c);
        return r;
    };
    const Key nmin = min_exps(terms_);
    const Key dmin = min_exps(d.terms_);
    Scalar rem = shifted(terms_, -nmin.first, -nmin.second);
    const Scalar div = shifted(d.terms_, -dmin.first, -dmin.second);
    const auto dlead = *div.terms_.rbegin();
    Scalar quot;
    while (!rem.is_zero()) {
        const auto rlead = *rem.terms_.rbegin();
        if (rlead.first.first < dlead.first.first || rlead.first.second < dlead.first.second)
            throw std::domain_error("div_exact: not divisible");
        Scalar t = Scalar::monomial(rlead.second / dlead.second,
                                    rlead.first.first - dlead.first.first,
                                    rlead.first.second - dlead.first.second);
        quot += t;
        rem -= t * div;
    }
    return shifted(quot.terms_, nmin.first - dmin.first, nmin.second - dmin.second);
}

std::string Scalar::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        const bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        std::vector<std::string> parts;
        if (a != 1 || (k.first == 0 && k.second == 0)) parts.push_back(a.get_str());
        if (k.first != 0) parts.push_back("q^" + exponent_str(k.first));
        if (k.second != 0) parts.push_back("gam^" + exponent_str(k.second));
        std::string piece;
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) piece += "*";
            piece += parts[i];
        }
        if (first) {
            out = (neg ? "-" : "") + piece;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + piece;
        }
    }
    return out;
}

Scalar q_integer(int n) {
    if (n < 0) return -q_integer(-n);
    Scalar s;
    for (int e = n - 1; e >= 1 - n; e -= 2) s += Scalar::q_pow(e);
    return s;
}

Scalar g_coeff(int p, GSeries variant) {
    if (p < 0) throw std::invalid_argument("g_coeff: negative index");
    Scalar g;
    if (p == 0) {
        g = Scalar::q_pow(-2);
    } else {
        g = (Scalar(1) - Scalar::q_pow(4)) * Scalar::q_pow(-2 * p - 2);
    }
    return variant == GSeries::plain ? g : g.bar_q();
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series add: order mismatch");
    TruncatedSeries r(a.order());
    for (int j = 0; j <= a.order(); ++j)
        r.set_coefficient(j, a.coefficient(j) + b.coefficient(j));
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series mul: order mismatch");
    TruncatedSeries r(a.order());
    for (int i = 0; i <= a.order(); ++i) {
        if (a.coefficient(i).is_zero()) continue;
        for (int j = 0; i + j <= a.order(); ++j) {
            if (b.coefficient(j).is_zero()) continue;
            r.set_coefficient(i + j, r.coefficient(i + j) + a.coefficient(i) * b.coefficient(j));
        }
    }
    return r;
}

TruncatedSeries series_exp(const TruncatedSeries& s) {
    if (!s.coefficient(0).is_zero())
        throw std::domain_error("series_exp: nonzero constant term");
    const int n = s.order();
    TruncatedSeries acc = TruncatedSeries::constant(n, Scalar(1));
    TruncatedSeries power = TruncatedSeries::constant(n, Scalar(1));
    Rational factorial(1);
    for (int j = 1; j <= n; ++j) {
        power = power * s;
        factorial *= j;
        TruncatedSeries term(n);
        for (int i = j; i <= n; ++i)
            term.set_coefficient(i, Rational(1) / factorial * power.coefficient(i));
        acc = acc + term;
    }
    return acc;
}

IdentityReport exp_g_identity_check(int order) {
    if (order < 1) throw std::invalid_argument("exp_g_identity_check: order must be >= 1");
    TruncatedSeries arg(order);
    for (int k = 1; k <= order; ++k) {
        // (q - q^-1) * (-[2k]/k) = -(q^2k - q^-2k)/k
        Rational ratio(-1, k);
        ratio.canonicalize();
        arg.set_coefficient(k, ratio * (Scalar::q_pow(2 * k) - Scalar::q_pow(-2 * k)));
    }
    TruncatedSeries lhs = series_exp(arg);

    TruncatedSeries rhs = TruncatedSeries::constant(order, Scalar(1));
    const Scalar lead = Scalar(1) - Scalar::q_pow(4);
    for (int r = 1; r <= order; ++r) rhs.set_coefficient(r, lead * Scalar::q_pow(-2 * r));

    IdentityReport rep;
    rep.equal = true;
    for (int j = 0; j <= order; ++j) {
        rep.lhs.push_back(lhs.coefficient(j));
        rep.rhs.push_back(rhs.coefficient(j));
        if (lhs.coefficient(j) != rhs.coefficient(j) && !rep.first_mismatch) {
            rep.equal = false;
            rep.first_mismatch = j;
        }
    }
    return rep;
}

}  // namespace nqm
