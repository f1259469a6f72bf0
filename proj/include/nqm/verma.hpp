#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nqm/algebra.hpp"

namespace nqm {

/// Element of the level-zero reduced module: payload * v, where v is the
/// highest-weight vector with K v = q^(lambdaH) v and gam acting as 1.
/// Payload coefficients are gamma-specialized on construction.
class VermaElement {
public:
    VermaElement() = default;
    VermaElement(int lambdaH, Element payload)
        : lambdaH_(lambdaH), payload_(payload.specialize_gamma_one()) {}

    static VermaElement highest_weight(int lambdaH) {
        return VermaElement(lambdaH, Element::unit());
    }

    int lambda_h() const { return lambdaH_; }
    const Element& payload() const { return payload_; }
    bool is_zero() const { return payload_.is_zero(); }

    friend VermaElement operator+(const VermaElement& a, const VermaElement& b);
    friend VermaElement operator-(const VermaElement& a, const VermaElement& b);
    friend VermaElement operator*(const Scalar& c, const VermaElement& v) {
        return VermaElement(v.lambdaH_, c.specialize_gamma_one() * v.payload_);
    }
    friend bool operator==(const VermaElement& a, const VermaElement& b) {
        return a.lambdaH_ == b.lambdaH_ && a.payload_ == b.payload_;
    }

private:
    int lambdaH_ = 0;
    Element payload_;
};

/// x^-(n): left multiplication on the payload.
VermaElement act_xminus(int n, const VermaElement& v);

/// a(k), k != 0: commutes through the payload, each factor x^-(n_i)
/// contributing -([2k]/k) x^-(n_i + k); a(k) v = 0 terminates.
VermaElement act_a(int k, const VermaElement& v);

/// K: scales a length-L payload monomial by q^(lambdaH - 2L).
VermaElement act_K(const VermaElement& v);

/// psi(j): pass-through psi(j) x^-(n) = sum_{r>=0} g(r) x^-(n+r) psi(j-r)
/// with terminal values psi(0) v = q^(lambdaH) v, psi(j) v = 0 for j >= 1,
/// and psi(j) identically 0 for j < 0.
VermaElement act_psi(int j, const VermaElement& v);

/// phi(j): mirror pass-through with gbar(r) and x^-(n-r); terminal values
/// phi(0) v = q^(-lambdaH) v, phi(j) v = 0 for j <= -1, phi(j) = 0 for j > 0.
VermaElement act_phi(int j, const VermaElement& v);

/// x^+(s): moves right through the payload, inserting
/// (psi(s + n_i) - phi(s + n_i)) / (q - q^-1); x^+(s) v = 0 terminates.
/// The division is exact in the Laurent ring and throws if it ever is not.
VermaElement act_xplus(int s, const VermaElement& v);

/// Second, independent evaluation path for psi(j), j >= 1: sums over all
/// compositions of j into positive parts, applying a(k_1)...a(k_p) with the
/// (q - q^-1)^p / p! weight and K at the end.
VermaElement psi_expansion_oracle(int j, const VermaElement& v);

struct SingularReport {
    int lambdaH = 0;
    int length = 0;
    int deltaSum = 0;
    int lo = 0, hi = 0;
    std::vector<Monomial> basis;
    int sLo = 0, sHi = 0;
    std::optional<int> symbolic_rank;  // Bareiss over the Laurent ring, length <= 2
    std::vector<std::pair<Rational, int>> point_ranks;
    int kernel_dim = 0;
    /// Length-1 kernel vectors certified annihilated for every integer s
    /// (the only constraint that can fire is s = -mode, which reduces to
    /// the q-integer of lambdaH).
    std::vector<std::string> certified;
    bool stationarity_ok = true;
    std::string note;
};

/// Assembles the exact linear system x^+(s) v = 0 over the truncated weight
/// space and reports its kernel.
SingularReport singular_probe(int lambdaH, int length, int deltaSum, int lo, int hi);

struct PairScanReport {
    int m = 0;
    int lStart = 0;
    std::vector<Rational> coeffs;
    int sFrom = 0, sTo = 0;
    int lambdaH = 0;
    int threshold = 0;       // smallest s with all transient terms gone
    bool threshold_met = false;
    bool images_monomial = false;  // every image a multiple of x^-(m+s)
    bool s_independent = false;    // normalized weights identical across s
    std::vector<Scalar> weights;   // normalized weight per l (first weight = 1)
    Scalar constraint_value;       // sum_l A_l * w_l
    bool vanishes = false;
    std::string note;
};

/// Applies x^+(s) to sum_l A_l x^-(l) x^-(m-l) v for each s in [sFrom, sTo]
/// and reports the induced linear constraint on the A_l: its engine-derived
/// weight pattern and whether that pattern is independent of s.
PairScanReport length_two_scan(const std::vector<Rational>& A, int lStart, int m,
                               int sFrom, int sTo, int lambdaH);

}  // namespace nqm
