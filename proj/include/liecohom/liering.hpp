#pragma once

#include "liecohom/abgroup.hpp"

#include <map>
#include <stdexcept>

namespace liecohom {

class LieRing;
using LieRingPtr = std::shared_ptr<const LieRing>;

/// Elements of a Lie ring are elements of its additive group.
using LieElement = GroupElement;

/// Raised when a structure-constant table violates one of the ring axioms.
/// Carries the first violated axiom and witness generator indices (0-based).
class LieValidationError : public std::domain_error {
public:
    enum class Kind { BadIndex, BadVector, OrderIncompatible, Jacobi };
    LieValidationError(Kind kind, std::string msg, std::size_t i = 0, std::size_t j = 0, std::size_t k = 0)
        : std::domain_error(std::move(msg)), kind(kind), i(i), j(j), k(k) {}
    Kind kind;
    std::size_t i, j, k;
};

/// Finite Lie ring given by structure constants on the generators of its
/// additive group. Entries are stored for i < j only; the bracket is
/// alternating by construction.
class LieRing {
public:
    using ScMap = std::map<std::pair<std::size_t, std::size_t>, std::vector<Int>>;

    /// Validates well-definedness of the bracket and the Jacobi identity on
    /// generator triples (sufficient by trilinearity).
    static LieRingPtr make(std::vector<Int> moduli, const ScMap& sc_entries);

    const GroupPtr& additive() const { return add_; }
    std::size_t rank() const { return add_->rank(); }
    Int order() const { return add_->order(); }
    bool is_abelian() const { return pairs_.empty(); }

    /// [g_i, g_j] with the sign handled for any index order.
    GroupElement bracket_generators(std::size_t i, std::size_t j) const;
    GroupElement bracket(const GroupElement& x, const GroupElement& y) const;

    /// Nonzero structure-constant table entries, keys i < j.
    const std::vector<std::pair<std::size_t, std::size_t>>& nonzero_pairs() const { return pairs_; }
    const GroupElement& sc(std::size_t i, std::size_t j) const;

    bool operator==(const LieRing& other) const;

private:
    LieRing() = default;
    GroupPtr add_;
    std::vector<std::vector<GroupElement>> sc_;  // sc_[i][j] for i < j
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

LieRingPtr abelian_ring(std::vector<Int> moduli);
/// Heisenberg ring over Z/p: generators g1, g2, g3 with [g1, g2] = g3 central.
LieRingPtr heisenberg(const Int& p);
LieRingPtr direct_sum(const LieRing& a, const LieRing& b);

/// Subgroup of the additive group flagged with its ideal status.
struct LieIdeal {
    Subgroup sub;
    bool ideal = false;
    bool central = false;
};

bool is_ideal(const LieRing& l, const Subgroup& s);
bool is_central_subgroup(const LieRing& l, const Subgroup& s);

/// Validates the flags; throws if the span of the generators is not an ideal.
LieIdeal make_ideal(const LieRing& l, std::vector<GroupElement> generators);

LieIdeal center(const LieRing& l);
LieIdeal derived(const LieRing& l);

struct LieQuotient {
    LieRingPtr ring;
    AbHom projection;                 // additive groups
    std::vector<GroupElement> lifts;  // one per quotient generator
};
LieQuotient quotient_lie(const LieRingPtr& l, const LieIdeal& ideal);

/// Hom(L, A) for an abelian coefficient ring A, realized as Hom(L/L^2, A).
struct LieHomGroup {
    LieRingPtr l;
    GroupPtr a;
    GroupPtr group;

    AbHom to_hom(const GroupElement& e) const;       // produces L.additive -> A
    GroupElement from_hom(const AbHom& h) const;

    QuotientResult by_derived;
    HomGroup homs;
};
LieHomGroup hom_lie_to_abelian(LieRingPtr l, GroupPtr a);

/// Dense lookup tables over a fully enumerated ring.
struct RingTables {
    LieRingPtr l;
    std::vector<GroupElement> elems;
    std::size_t size = 0;
    std::vector<std::size_t> add_t;   // size x size
    std::vector<std::size_t> brk_t;   // size x size
    std::vector<std::size_t> neg_t;   // size

    static RingTables build(LieRingPtr l, std::size_t guard = 1u << 12);

    std::size_t index(const GroupElement& x) const;
    std::size_t add(std::size_t i, std::size_t j) const { return add_t[i * size + j]; }
    std::size_t brk(std::size_t i, std::size_t j) const { return brk_t[i * size + j]; }
    std::size_t neg(std::size_t i) const { return neg_t[i]; }
};

}  // namespace liecohom
