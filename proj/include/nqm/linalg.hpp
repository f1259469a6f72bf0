#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "nqm/scalar.hpp"

namespace nqm {

inline bool ring_is_zero(const Rational& x) { return x == 0; }
inline bool ring_is_zero(const Scalar& x) { return x.is_zero(); }

inline Rational ring_div_exact(const Rational& a, const Rational& b) { return a / b; }
inline Scalar ring_div_exact(const Scalar& a, const Scalar& b) { return a.div_exact(b); }

/// Rank by fraction-free (Bareiss) elimination with row pivoting.  Works
/// over any integral domain with exact division; every intermediate entry
/// is a minor of the input, so the divisions never leave remainders.
template <typename R>
int bareiss_rank(std::vector<std::vector<R>> a) {
    if (a.empty()) return 0;
    const size_t rows = a.size(), cols = a[0].size();
    R prev = R(1);
    size_t r = 0;
    int rank = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && ring_is_zero(a[p][c])) ++p;
        if (p == rows) continue;
        if (p != r) std::swap(a[p], a[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j)
                a[i][j] = ring_div_exact(a[r][c] * a[i][j] - a[i][c] * a[r][j], prev);
            a[i][c] = R(0);
        }
        prev = a[r][c];
        ++r;
        ++rank;
    }
    return rank;
}

/// Exact determinant by cofactor expansion; intended for small matrices.
template <typename R>
R cofactor_det(const std::vector<std::vector<R>>& a) {
    const size_t n = a.size();
    if (n == 0) return R(1);
    if (n == 1) return a[0][0];
    R det = R(0);
    for (size_t j = 0; j < n; ++j) {
        if (ring_is_zero(a[0][j])) continue;
        std::vector<std::vector<R>> minor;
        minor.reserve(n - 1);
        for (size_t i = 1; i < n; ++i) {
            std::vector<R> row;
            row.reserve(n - 1);
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(a[i][k]);
            minor.push_back(std::move(row));
        }
        R term = a[0][j] * cofactor_det(minor);
        if (j % 2 == 0)
            det = det + term;
        else
            det = det - term;
    }
    return det;
}

}  // namespace nqm
