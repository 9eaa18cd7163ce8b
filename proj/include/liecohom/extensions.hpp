#pragma once

#include "liecohom/cohomology.hpp"

#include <optional>

namespace liecohom {

/// Central extension 0 -> A -> B -> L -> 0, carried as (B, iota, beta).
struct CentralExtension {
    GroupPtr a;
    LieRingPtr b;
    LieRingPtr l;
    AbHom iota;  // A -> B.additive
    AbHom beta;  // B.additive -> L.additive
};

/// Checks every structural invariant: iota injective with central image,
/// beta a surjective Lie homomorphism, im(iota) = ker(beta), |B| = |A||L|.
void validate_extension(const CentralExtension& e, std::size_t guard = 1u << 12);

/// The A x L construction: B carries the twisted addition and bracket read
/// off the cocycle, re-presented on generators as a validated LieRing.
CentralExtension extension_from_cocycle(LieRingPtr l, GroupPtr a, const Cocycle& c, std::size_t guard = 1u << 12);

/// Set-theoretic section of beta, one B element per L element.
struct Section {
    std::vector<GroupElement> lambda;  // indexed by L element enumeration
};

/// Deterministic section: the enumeration-first preimage of each element.
Section section_of(const CentralExtension& e, std::size_t guard = 1u << 12);

Cocycle cocycle_from_extension(const CentralExtension& e, const Section& s, std::size_t guard = 1u << 12);
/// Shorthand with the deterministic section.
Cocycle cocycle_of(const CentralExtension& e, std::size_t guard = 1u << 12);

bool are_equivalent(const CentralExtension& e1, const CentralExtension& e2, const H2Group& h);
bool are_equivalent(const CentralExtension& e1, const CentralExtension& e2);

/// Exhaustive search for a homomorphism B -> B' commuting with both
/// structure maps; any match is verified bijective. Test oracle.
struct BruteOptions {
    std::size_t max_order = 64;
};
bool brute_equivalent(const CentralExtension& e1, const CentralExtension& e2, const BruteOptions& opts = {});

struct SplitResult {
    bool split = false;
    std::optional<Section> witness;  // homomorphic section when split
};
SplitResult is_split(const CentralExtension& e, const H2Group& h);
SplitResult is_split(const CentralExtension& e);

struct ExtensionClass {
    GroupElement class_element;
    CentralExtension extension;
    std::vector<Int> b_invariants;  // additive invariant factors of B
    bool split = false;
};

struct ClassifyOptions {
    std::size_t budget = 10000;
    CohomOptions cohom;
};

/// One representative extension per element of H^2(L, A).
std::vector<ExtensionClass> classify_extensions(LieRingPtr l, GroupPtr a, const ClassifyOptions& opts = {});

}  // namespace liecohom
