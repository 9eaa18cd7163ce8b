#pragma once

#include "liecohom/liering.hpp"

#include <array>
#include <string>

namespace liecohom {

struct CohomOptions {
    /// Assembly refuses rings with more elements than this; the systems have
    /// on the order of 5*|L|^3 rows.
    std::size_t max_order = 32;
};

/// Coefficient layout of the (f, g) table space: all f coordinates first,
/// row-major over the element enumeration then coefficient generator index,
/// then all g coordinates in the same order.
struct TableSpace {
    LieRingPtr l;
    GroupPtr a;
    std::shared_ptr<const RingTables> tables;
    std::size_t nl = 0;
    std::size_t ra = 0;
    GroupPtr space;

    static TableSpace build(LieRingPtr l, GroupPtr a, const CohomOptions& opts = {});

    std::size_t dim() const { return 2 * nl * nl * ra; }
    std::size_t f_base(std::size_t x, std::size_t y) const { return (x * nl + y) * ra; }
    std::size_t g_base(std::size_t x, std::size_t y) const { return nl * nl * ra + (x * nl + y) * ra; }
};

/// Pair of tables f, g : L x L -> A, indexed by the fixed element enumeration.
struct Cocycle {
    LieRingPtr l;
    GroupPtr a;
    std::vector<GroupElement> f;  // |L|^2 entries, index x*|L| + y
    std::vector<GroupElement> g;

    const GroupElement& f_at(std::size_t x, std::size_t y) const { return f[x * n() + y]; }
    const GroupElement& g_at(std::size_t x, std::size_t y) const { return g[x * n() + y]; }
    std::size_t n() const;
    bool is_zero() const;
};

Cocycle zero_cocycle(LieRingPtr l, GroupPtr a, std::size_t guard = 1u << 12);
Cocycle cocycle_add(const Cocycle& a, const Cocycle& b);
Cocycle cocycle_sub(const Cocycle& a, const Cocycle& b);
Cocycle cocycle_scale(const Int& k, const Cocycle& c);

std::vector<Int> flatten(const TableSpace& ts, const Cocycle& c);
Cocycle unflatten(const TableSpace& ts, const std::vector<Int>& v);

struct CocycleCheck {
    bool ok = true;
    int condition = 0;                     // 1..5 on failure
    std::array<std::size_t, 3> witness{};  // element indices
    std::string message;
};

/// Pointwise check of all five cocycle conditions; reports the first failure.
CocycleCheck is_cocycle(const Cocycle& c, std::size_t guard = 1u << 12);

/// Coboundary of a pointed map t : L -> A (indexed by element enumeration,
/// t[0] must be zero).
Cocycle coboundary_from(LieRingPtr l, GroupPtr a, const std::vector<GroupElement>& t, std::size_t guard = 1u << 12);

/// Solution subgroup of the conditions, inside the table space.
Subgroup z2(const TableSpace& ts);
/// Subgroup generated by the indicator-map coboundaries.
Subgroup b2(const TableSpace& ts);

class H2Group {
public:
    LieRingPtr l;
    GroupPtr a;
    GroupPtr group;             // invariant factors of H^2(L, A)
    std::vector<Cocycle> reps;  // one representative per group generator

    TableSpace ts;
    std::shared_ptr<const TriangularBasis> z2_basis;
    std::shared_ptr<const TriangularBasis> b2_basis;
    IntMat class_matrix;  // class coords = class_matrix * (reduction coeffs)

    /// Coordinates of the class of c in the invariant factors. Requires a
    /// genuine cocycle over the same (L, A).
    GroupElement class_of(const Cocycle& c) const;
};

H2Group h2(LieRingPtr l, GroupPtr a, const CohomOptions& opts = {});

}  // namespace liecohom
