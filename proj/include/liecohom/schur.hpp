#pragma once

#include "liecohom/cohomology.hpp"

namespace liecohom {

/// Schur multiplier M(L) computed through finite cyclic coefficients. The
/// group holds the stabilized invariant factors; stable records whether all
/// three schedule entries agreed.
struct MultiplierResult {
    GroupPtr group;
    std::vector<Int> schedule;                     // moduli N tried
    std::vector<std::vector<Int>> factors_per_n;   // invariants found at each N
    bool stable = false;
    H2Group witness;                               // H^2(L, Z/N) at the final N
};

/// Invariant factors of the image of H^2(L, Z/n) -> H^2(L, Z/(n*e)) under
/// the coefficient inclusion x -> e*x, where e = exp(L). These are the
/// classes that survive into every larger cyclic coefficient group, which is
/// how the multiplicative group of the complex numbers is approximated.
std::vector<Int> stable_h2_invariants(LieRingPtr l, const Int& n, const CohomOptions& opts = {});

MultiplierResult schur_multiplier(LieRingPtr l, const CohomOptions& opts = {});

/// Direct sum of Z/gcd(d_i, d_j) over index pairs i < j. Oracle for the
/// multiplier of an abelian ring; moduli must be in invariant-factor form.
GroupPtr exterior_square(const std::vector<Int>& moduli);

}  // namespace liecohom
