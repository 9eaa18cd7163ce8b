#pragma once

#include "liecohom/intmat.hpp"
#include "liecohom/lattice.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

namespace liecohom {

class FinAbGroup;
using GroupPtr = std::shared_ptr<const FinAbGroup>;

/// Finite abelian group presented as a direct sum of cyclic groups, one
/// modulus per generator. A modulus of 1 is a legal degenerate coordinate.
class FinAbGroup {
public:
    static GroupPtr make(std::vector<Int> moduli);

    const std::vector<Int>& moduli() const { return moduli_; }
    std::size_t rank() const { return moduli_.size(); }
    Int order() const;
    Int exponent() const;
    /// Divisibility chain d1 | d2 | ... with the trivial factors dropped.
    std::vector<Int> canonical_invariants() const;

    bool operator==(const FinAbGroup& other) const { return moduli_ == other.moduli_; }

private:
    explicit FinAbGroup(std::vector<Int> moduli) : moduli_(std::move(moduli)) {}
    std::vector<Int> moduli_;
};

GroupPtr trivial_group();

struct GroupElement {
    GroupPtr parent;
    std::vector<Int> coeffs;  // one per generator, reduced into [0, modulus)

    bool is_zero() const;
    bool operator==(const GroupElement& other) const;
};

GroupElement element(GroupPtr g, std::vector<Int> coeffs);
GroupElement zero(GroupPtr g);
GroupElement generator(GroupPtr g, std::size_t i);
GroupElement add(const GroupElement& a, const GroupElement& b);
GroupElement neg(const GroupElement& a);
GroupElement sub(const GroupElement& a, const GroupElement& b);
GroupElement scalar_mul(const Int& k, const GroupElement& a);
Int element_order(const GroupElement& a);

/// Fixed enumeration: mixed-radix index of the coefficient vector, zero
/// first, last coordinate fastest.
Int element_index(const GroupElement& a);
GroupElement element_at(GroupPtr g, const Int& index);
std::vector<GroupElement> enumerate_elements(GroupPtr g, std::size_t guard = 1u << 20);

/// Homomorphism between finite abelian groups. Column j of the matrix is the
/// image of domain generator j; construction checks well-definedness.
struct AbHom {
    GroupPtr domain;
    GroupPtr codomain;
    IntMat mat;  // codomain.rank x domain.rank

    static AbHom make(GroupPtr domain, GroupPtr codomain, IntMat mat);
    static AbHom identity(GroupPtr g);
    static AbHom zero(GroupPtr domain, GroupPtr codomain);

    GroupElement apply(const GroupElement& x) const;
    GroupElement apply_generator(std::size_t j) const;
    bool is_zero() const;
    bool operator==(const AbHom& other) const;
};

AbHom compose(const AbHom& outer, const AbHom& inner);
AbHom hom_add(const AbHom& a, const AbHom& b);
AbHom hom_neg(const AbHom& a);

/// Subgroup of a FinAbGroup, carried as user generators plus a lazily built
/// canonical lattice basis. Immutable and safe for shared concurrent use.
class Subgroup {
public:
    Subgroup(GroupPtr parent, std::vector<GroupElement> generators);

    const GroupPtr& parent() const { return parent_; }
    const std::vector<GroupElement>& generators() const { return gens_; }

    const TriangularBasis& lattice() const;
    Int order() const;
    bool contains(const GroupElement& x) const;
    bool contains(const Subgroup& other) const;
    bool operator==(const Subgroup& other) const;
    bool is_whole_group() const;
    bool is_trivial() const;

private:
    struct Cache {
        std::once_flag once;
        std::unique_ptr<TriangularBasis> basis;
    };
    GroupPtr parent_;
    std::vector<GroupElement> gens_;
    std::shared_ptr<Cache> cache_;
};

Subgroup trivial_subgroup(GroupPtr g);
Subgroup whole_subgroup(GroupPtr g);

/// All subgroups of g, each as a Subgroup (order of the list is
/// deterministic). Guarded against large groups.
std::vector<Subgroup> enumerate_subgroups(GroupPtr g, std::size_t guard = 4096);

/// Solution subgroup of rows . x = 0 where unknown j lives in Z/moduli[j] of
/// the given space. The modulus of each congruence row is the lcm of the
/// moduli of the unknowns it touches.
Subgroup solve_congruences(const IntMat& rows, GroupPtr space);

/// Kernel and image of a homomorphism.
std::pair<Subgroup, Subgroup> kernel_image(const AbHom& h);

/// Quotient g/s in invariant-factor form with the projection and explicit
/// generator lifts.
struct QuotientResult {
    GroupPtr group;
    AbHom projection;                  // parent -> group
    std::vector<GroupElement> lifts;   // one parent element per group generator
};
QuotientResult quotient(GroupPtr g, const Subgroup& s);

/// A subgroup re-presented as an abstract group with its inclusion map.
struct SubgroupPresentation {
    GroupPtr group;
    AbHom inclusion;  // group -> parent

    /// Abstract coordinates of a parent element, if it lies in the subgroup.
    std::optional<GroupElement> coordinates(const GroupElement& x) const;

    // internal transport data
    std::shared_ptr<const TriangularBasis> lattice;
    IntMat u;  // abstract coords = u * (lattice reduction coefficients)
};
SubgroupPresentation subgroup_as_group(const Subgroup& s);

/// Hom(a, b) as an abstract group with the element <-> homomorphism
/// correspondence.
struct HomGroup {
    GroupPtr domain;
    GroupPtr codomain;
    GroupPtr group;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (domain gen, codomain gen)

    AbHom to_hom(const GroupElement& e) const;
    GroupElement from_hom(const AbHom& h) const;
};
HomGroup hom_group(GroupPtr a, GroupPtr b);

}  // namespace liecohom
