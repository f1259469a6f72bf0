#pragma once

#include <functional>
#include <map>
#include <vector>

#include "nqm/scalar.hpp"

namespace nqm {

/// Monomial x^-(n1)...x^-(nk), stored as its mode sequence.  A monomial in
/// normal form has nondecreasing modes.
using Monomial = std::vector<int>;

inline bool is_normal(const Monomial& m) {
    for (size_t i = 1; i < m.size(); ++i)
        if (m[i - 1] > m[i]) return false;
    return true;
}

/// Weight -n*alpha + m*delta of a homogeneous element: n = word length,
/// m = sum of modes.
struct Weight {
    int length = 0;
    int deltaSum = 0;
    friend bool operator==(const Weight&, const Weight&) = default;
    friend Weight operator+(const Weight& a, const Weight& b) {
        return {a.length + b.length, a.deltaSum + b.deltaSum};
    }
};

Weight weight_of(const Monomial& m);

/// Monomial order used for element storage and all canonical output:
/// first by length, then lexicographically on the mode sequence.
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// Finite linear combination of normal-form monomials with Scalar
/// coefficients: an element of the negative current subalgebra.
class Element {
public:
    using TermMap = std::map<Monomial, Scalar, MonomialLess>;

    Element() = default;

    static Element zero() { return Element(); }
    static Element unit() { return term(Monomial{}, Scalar(1)); }
    static Element x_minus(int n) { return term(Monomial{n}, Scalar(1)); }
    /// Single term; the monomial must already be in normal form.
    static Element term(Monomial m, Scalar c);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    void add_term(const Monomial& m, const Scalar& c);

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    Element operator-() const;
    friend Element operator*(const Scalar& c, const Element& e);
    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    /// Fold gam into the coefficient ring identity (gam = 1).
    Element specialize_gamma_one() const;

    /// True when every monomial carries the same weight (vacuously true
    /// for zero).
    bool is_homogeneous(Weight* w = nullptr) const;

private:
    TermMap terms_;
};

/// Picks which descent (index i with word[i] > word[i+1]) to rewrite next;
/// receives the word and the list of descent positions.
using DescentPicker = std::function<size_t(const Monomial&, const std::vector<size_t>&)>;

/// Rewrites an arbitrary word in the x^-(n) generators to its unique
/// normal-form expansion.  An adjacent out-of-order pair x^-(a)x^-(b) with
/// a > b rewrites as
///   a == b+1 :  q^-2 x^-(b)x^-(a)
///   a >  b+1 :  q^-2 x^-(b)x^-(a) + q^-2 x^-(a-1)x^-(b+1) - x^-(b+1)x^-(a-1)
/// The total inversion weight sum_{i<j, w_i>w_j}(w_i - w_j) strictly drops at
/// every step (see docs/REWRITING.md), so any descent-picking strategy
/// terminates with the same result.
Element normal_form(const Monomial& word);
Element normal_form(const Monomial& word, const DescentPicker& pick);

/// Apply normal_form to every monomial key of a linear combination.
Element normal_form(const Element& e);

/// Algebra product: bilinear extension of word concatenation followed by
/// normal_form.
Element multiply(const Element& a, const Element& b);

/// All nondecreasing n-tuples with entries in [lo, hi] summing to deltaSum,
/// in lexicographic order.
std::vector<Monomial> basis_enum(int length, int deltaSum, int lo, int hi);

}  // namespace nqm
