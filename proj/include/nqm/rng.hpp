#pragma once

#include <cstdint>
#include <stdexcept>

#include "nqm/algebra.hpp"

namespace nqm {

/// SplitMix64: the project-wide seedable generator.  Fully specified by
/// its seed, so every sampled test case reproduces bit-identically on any
/// platform (see README, "Reproducibility").
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish integer in [lo, hi]; the slight modulo bias is irrelevant
    /// for test sampling and keeps the sequence platform-independent.
    int uniform_int(int lo, int hi) {
        if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
        const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        return lo + static_cast<int>(next() % span);
    }

private:
    std::uint64_t state_;
};

/// Random word of length in [0, lenMax] with modes in [lo, hi].
inline Monomial random_word(SplitMix64& rng, int lenMax, int lo, int hi) {
    const int len = rng.uniform_int(0, lenMax);
    Monomial w(static_cast<size_t>(len));
    for (auto& m : w) m = rng.uniform_int(lo, hi);
    return w;
}

/// Random 1- or 2-term element with small rational-times-q-power
/// coefficients; every monomial is normalized before use.
inline Element random_element(SplitMix64& rng, int lenMax, int lo, int hi) {
    Element e;
    const int nterms = rng.uniform_int(1, 2);
    for (int t = 0; t < nterms; ++t) {
        const int num = rng.uniform_int(-3, 3);
        const int qh = 2 * rng.uniform_int(-2, 2);
        Scalar c = Scalar::monomial(Rational(num == 0 ? 1 : num), qh, 0);
        e += c * normal_form(random_word(rng, lenMax, lo, hi));
    }
    return e;
}

}  // namespace nqm
