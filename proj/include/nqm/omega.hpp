#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "nqm/algebra.hpp"

namespace nqm {

enum class OmegaKind { psi, phi };

/// Action of Omega_psi(k) on an element in normal form.  On a monomial
/// x^-(m) * P (m the least mode) it unfolds as
///   delta_{k,-m} gam^k P
///     + sum_{r>=0} gbar(r) gam^r x^-(m+r) * Omega_psi(k-r)(P),
/// the r-sum cut off by the vanishing bound Omega_psi(j, M) = 0 for
/// j < -max(modes of M); Omega_psi(k)(1) = 0.
Element omega_psi(int k, const Element& e);

/// Action of Omega_phi(k): on x^-(m) * P it unfolds as
///   delta_{k,-m} gam^m P
///     + sum_{r>=0} g(r) gam^r x^-(m-r) * Omega_phi(k+r)(P),
/// with the mirror bound Omega_phi(j, M) = 0 for j > -min(modes of M).
Element omega_phi(int k, const Element& e);

Element omega_apply(OmegaKind kind, int k, const Element& e);

/// The generating-function commutation relations, expanded in components.
enum class OmegaRel { eq26, eq27, eq28, eq29, eq30 };

std::optional<OmegaRel> omega_rel_from_name(const std::string& name);
std::string omega_rel_name(OmegaRel rel);

struct SampleSpec {
    int lenMax = 3;
    int modeLo = -3, modeHi = 3;
    int idxLo = -4, idxHi = 4;
    int samples = 200;
    std::uint64_t seed = 42;
};

struct Counterexample {
    std::string what;
    std::string lhs;
    std::string rhs;
};

struct RelationReport {
    std::string rel;
    bool pass = true;
    long cases = 0;
    std::optional<Counterexample> first_failure;
};

/// Evaluates both sides of the chosen relation on random elements, over all
/// component indices in the sample window; exact equality required.
RelationReport check_omega_relation(OmegaRel rel, const SampleSpec& spec);

/// Operator identity Omega_psi(k) Omega_phi(m) =
///   sum_{r>=0} g(r) gam^{2r} Omega_phi(m+r) Omega_psi(k-r), checked on e.
bool check_mixed_product_identity(int k, int m, const Element& e);

}  // namespace nqm
