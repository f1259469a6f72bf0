#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nqm/algebra.hpp"

namespace nqm {

/// The symmetric bilinear form with (1,1) = 1 and adjunction
/// (x^-(m) a, b) = (a, Omega_psi(-m) b); gamma factors move across as ring
/// scalars, so the value lands in the coefficient ring.
Scalar bilinear_pair(const Element& a, const Element& b);

struct GramMatrix {
    int length = 0;
    int deltaSum = 0;
    int lo = 0, hi = 0;
    std::vector<Monomial> basis;
    std::vector<std::vector<Scalar>> entries;  // entries[i][j] = pair(basis[i], basis[j])
};

/// Gram matrix of the form on the finite basis_enum window.
GramMatrix gram(int length, int deltaSum, int lo, int hi);

struct GramRankReport {
    /// Set when the symbolic determinant was computed (size <= 6).
    std::optional<bool> symbolic_det_nonzero;
    std::optional<Scalar> det;
    /// (q sample point, rank over Q at that point with gam = 1)
    std::vector<std::pair<Rational, int>> point_ranks;
    std::string note;
};

/// Nondegeneracy probe: exact cofactor determinant for small blocks, plus
/// exact ranks at rational q sample points (gam = 1).  Sample points with
/// |p| in {0, 1} are rejected as degenerate specializations.
GramRankReport gram_rank_report(const GramMatrix& g, const std::vector<Rational>& evalPoints);

}  // namespace nqm
