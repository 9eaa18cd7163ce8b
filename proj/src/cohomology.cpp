#include "liecohom/cohomology.hpp"

#include <sstream>
#include <stdexcept>

namespace liecohom {

namespace {

std::vector<long> moduli_ll(const FinAbGroup& g) {
    std::vector<long> v(g.rank());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = to_ll_checked(g.moduli()[i]);
    return v;
}

void require_match(const Cocycle& c, const TableSpace& ts) {
    if (!(*c.l == *ts.l) || !(*c.a == *ts.a)) throw std::invalid_argument("cocycle does not match the table space");
}

}  // namespace

TableSpace TableSpace::build(LieRingPtr l, GroupPtr a, const CohomOptions& opts) {
    if (l->order() > static_cast<unsigned long>(opts.max_order)) {
        std::ostringstream os;
        os << "cohomology: ring of order " << l->order() << " exceeds the limit " << opts.max_order
           << " (raise the limit to override)";
        throw std::length_error(os.str());
    }
    TableSpace ts;
    ts.l = l;
    ts.a = a;
    ts.tables = std::make_shared<RingTables>(RingTables::build(l, opts.max_order));
    ts.nl = ts.tables->size;
    ts.ra = a->rank();
    std::vector<Int> mods;
    mods.reserve(ts.dim());
    for (std::size_t i = 0; i < 2 * ts.nl * ts.nl; ++i)
        for (std::size_t k = 0; k < ts.ra; ++k) mods.push_back(a->moduli()[k]);
    ts.space = FinAbGroup::make(std::move(mods));
    return ts;
}

std::size_t Cocycle::n() const {
    std::size_t nn = 0;
    while (nn * nn < f.size()) ++nn;
    return nn;
}

bool Cocycle::is_zero() const {
    for (const auto& e : f)
        if (!e.is_zero()) return false;
    for (const auto& e : g)
        if (!e.is_zero()) return false;
    return true;
}

Cocycle zero_cocycle(LieRingPtr l, GroupPtr a, std::size_t guard) {
    std::size_t n = enumerate_elements(l->additive(), guard).size();
    GroupElement z = zero(a);
    return Cocycle{std::move(l), a, std::vector<GroupElement>(n * n, z), std::vector<GroupElement>(n * n, z)};
}

Cocycle cocycle_add(const Cocycle& a, const Cocycle& b) {
    if (!(*a.l == *b.l) || !(*a.a == *b.a)) throw std::invalid_argument("cocycle_add: mismatched rings");
    Cocycle out = a;
    for (std::size_t i = 0; i < out.f.size(); ++i) out.f[i] = add(out.f[i], b.f[i]);
    for (std::size_t i = 0; i < out.g.size(); ++i) out.g[i] = add(out.g[i], b.g[i]);
    return out;
}

Cocycle cocycle_sub(const Cocycle& a, const Cocycle& b) {
    if (!(*a.l == *b.l) || !(*a.a == *b.a)) throw std::invalid_argument("cocycle_sub: mismatched rings");
    Cocycle out = a;
    for (std::size_t i = 0; i < out.f.size(); ++i) out.f[i] = sub(out.f[i], b.f[i]);
    for (std::size_t i = 0; i < out.g.size(); ++i) out.g[i] = sub(out.g[i], b.g[i]);
    return out;
}

Cocycle cocycle_scale(const Int& k, const Cocycle& c) {
    Cocycle out = c;
    for (auto& e : out.f) e = scalar_mul(k, e);
    for (auto& e : out.g) e = scalar_mul(k, e);
    return out;
}

std::vector<Int> flatten(const TableSpace& ts, const Cocycle& c) {
    require_match(c, ts);
    std::vector<Int> v(ts.dim());
    for (std::size_t p = 0; p < ts.nl * ts.nl; ++p)
        for (std::size_t k = 0; k < ts.ra; ++k) {
            v[p * ts.ra + k] = c.f[p].coeffs[k];
            v[ts.nl * ts.nl * ts.ra + p * ts.ra + k] = c.g[p].coeffs[k];
        }
    return v;
}

Cocycle unflatten(const TableSpace& ts, const std::vector<Int>& v) {
    if (v.size() != ts.dim()) throw std::invalid_argument("unflatten: wrong coordinate count");
    Cocycle c{ts.l, ts.a, {}, {}};
    c.f.reserve(ts.nl * ts.nl);
    c.g.reserve(ts.nl * ts.nl);
    for (std::size_t p = 0; p < ts.nl * ts.nl; ++p) {
        std::vector<Int> fc(ts.ra), gc(ts.ra);
        for (std::size_t k = 0; k < ts.ra; ++k) {
            fc[k] = v[p * ts.ra + k];
            gc[k] = v[ts.nl * ts.nl * ts.ra + p * ts.ra + k];
        }
        c.f.push_back(element(ts.a, std::move(fc)));
        c.g.push_back(element(ts.a, std::move(gc)));
    }
    return c;
}

CocycleCheck is_cocycle(const Cocycle& c, std::size_t guard) {
    RingTables t = RingTables::build(c.l, guard);
    const std::size_t n = t.size;
    if (c.f.size() != n * n || c.g.size() != n * n) throw std::invalid_argument("is_cocycle: table shape mismatch");
    for (const auto& e : c.f)
        if (!(*e.parent == *c.a)) throw std::invalid_argument("is_cocycle: f value outside the coefficient group");
    for (const auto& e : c.g)
        if (!(*e.parent == *c.a)) throw std::invalid_argument("is_cocycle: g value outside the coefficient group");

    auto fail = [&](int cond, std::size_t x, std::size_t y, std::size_t z) {
        std::ostringstream os;
        os << "condition (" << cond << ") fails at element indices (" << x << "," << y << "," << z << ")";
        return CocycleCheck{false, cond, {x, y, z}, os.str()};
    };
    auto F = [&](std::size_t x, std::size_t y) -> const GroupElement& { return c.f[x * n + y]; };
    auto G = [&](std::size_t x, std::size_t y) -> const GroupElement& { return c.g[x * n + y]; };

    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                GroupElement lhs = F(t.add(x, y), z);
                GroupElement rhs = add(add(F(x, z), F(y, z)), G(t.brk(x, z), t.brk(y, z)));
                if (!(lhs == rhs)) return fail(1, x, y, z);
                lhs = F(x, t.add(y, z));
                rhs = add(add(F(x, y), F(x, z)), G(t.brk(x, y), t.brk(x, z)));
                if (!(lhs == rhs)) return fail(1, x, y, z);
            }
    for (std::size_t x = 0; x < n; ++x)
        if (!F(x, x).is_zero()) return fail(2, x, x, x);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                std::size_t yz = t.brk(y, z), xy = t.brk(x, y), zx = t.brk(z, x);
                GroupElement lhs = add(add(F(x, yz), F(z, xy)), F(y, zx));
                std::size_t xyz = t.brk(x, yz), zxy = t.brk(z, xy), yzx = t.brk(y, zx);
                GroupElement rhs = neg(add(G(xyz, zxy), G(t.neg(yzx), yzx)));
                if (!(lhs == rhs)) return fail(3, x, y, z);
            }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                GroupElement lhs = add(G(t.add(x, y), z), G(x, y));
                GroupElement rhs = add(G(x, t.add(y, z)), G(y, z));
                if (!(lhs == rhs)) return fail(4, x, y, z);
            }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (!(G(x, y) == G(y, x))) return fail(5, x, y, y);
    return {};
}

Cocycle coboundary_from(LieRingPtr l, GroupPtr a, const std::vector<GroupElement>& t, std::size_t guard) {
    RingTables tab = RingTables::build(l, guard);
    const std::size_t n = tab.size;
    if (t.size() != n) throw std::invalid_argument("coboundary_from: t must assign a value to every element");
    if (!t[0].is_zero()) throw std::invalid_argument("coboundary_from: t(0) must be 0");
    for (const auto& e : t)
        if (!(*e.parent == *a)) throw std::invalid_argument("coboundary_from: value outside the coefficient group");
    Cocycle c{std::move(l), std::move(a), {}, {}};
    c.f.reserve(n * n);
    c.g.reserve(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) c.f.push_back(neg(t[tab.brk(x, y)]));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) c.g.push_back(sub(add(t[x], t[y]), t[tab.add(x, y)]));
    return c;
}

namespace {

// Rows of the Z^2 linear system over the table space, one per condition
// instance and coefficient generator, with the coefficient modulus as row
// modulus. Terms at coinciding unknowns accumulate.
void assemble_rows(const TableSpace& ts, std::vector<SparseRow>& rows, std::vector<long>& rowmod) {
    const RingTables& t = *ts.tables;
    const std::size_t n = ts.nl;
    auto amod = moduli_ll(*ts.a);

    auto emit = [&](const std::vector<std::pair<std::size_t, long>>& pattern) {
        for (std::size_t k = 0; k < ts.ra; ++k) {
            if (amod[k] == 1) continue;
            SparseRow r;
            for (const auto& [base, coeff] : pattern) r.emplace_back(base + k, coeff);
            rows.push_back(std::move(r));
            rowmod.push_back(amod[k]);
        }
    };

    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                // (1a) f(x+y,z) - f(x,z) - f(y,z) - g([x,z],[y,z]) = 0
                emit({{ts.f_base(t.add(x, y), z), 1},
                      {ts.f_base(x, z), -1},
                      {ts.f_base(y, z), -1},
                      {ts.g_base(t.brk(x, z), t.brk(y, z)), -1}});
                // (1b) f(x,y+z) - f(x,y) - f(x,z) - g([x,y],[x,z]) = 0
                emit({{ts.f_base(x, t.add(y, z)), 1},
                      {ts.f_base(x, y), -1},
                      {ts.f_base(x, z), -1},
                      {ts.g_base(t.brk(x, y), t.brk(x, z)), -1}});
                // (3) f(x,[y,z]) + f(z,[x,y]) + f(y,[z,x])
                //     + g([x,[y,z]],[z,[x,y]]) + g(-[y,[z,x]],[y,[z,x]]) = 0
                std::size_t yz = t.brk(y, z), xy = t.brk(x, y), zx = t.brk(z, x);
                std::size_t yzx = t.brk(y, zx);
                emit({{ts.f_base(x, yz), 1},
                      {ts.f_base(z, xy), 1},
                      {ts.f_base(y, zx), 1},
                      {ts.g_base(t.brk(x, yz), t.brk(z, xy)), 1},
                      {ts.g_base(t.neg(yzx), yzx), 1}});
                // (4) g(x+y,z) + g(x,y) - g(x,y+z) - g(y,z) = 0
                emit({{ts.g_base(t.add(x, y), z), 1},
                      {ts.g_base(x, y), 1},
                      {ts.g_base(x, t.add(y, z)), -1},
                      {ts.g_base(y, z), -1}});
            }
    for (std::size_t x = 0; x < n; ++x) {
        // (2) f(x,x) = 0
        emit({{ts.f_base(x, x), 1}});
        // (5) g(x,y) = g(y,x)
        for (std::size_t y = x + 1; y < n; ++y) emit({{ts.g_base(x, y), 1}, {ts.g_base(y, x), -1}});
    }
}

}  // namespace

Subgroup z2(const TableSpace& ts) {
    std::vector<SparseRow> rows;
    std::vector<long> rowmod;
    assemble_rows(ts, rows, rowmod);
    auto gens = congruence_kernel(ts.dim(), moduli_ll(*ts.space), rows, rowmod);
    std::vector<GroupElement> out;
    out.reserve(gens.size());
    for (auto& v : gens) out.push_back(element(ts.space, std::move(v)));
    return Subgroup(ts.space, std::move(out));
}

Subgroup b2(const TableSpace& ts) {
    std::vector<GroupElement> gens;
    for (std::size_t li = 1; li < ts.nl; ++li)
        for (std::size_t k = 0; k < ts.ra; ++k) {
            if (ts.a->moduli()[k] == 1) continue;
            std::vector<GroupElement> t(ts.nl, zero(ts.a));
            t[li] = generator(ts.a, k);
            gens.push_back(element(ts.space, flatten(ts, coboundary_from(ts.l, ts.a, t))));
        }
    return Subgroup(ts.space, std::move(gens));
}

H2Group h2(LieRingPtr l, GroupPtr a, const CohomOptions& opts) {
    TableSpace ts = TableSpace::build(l, a, opts);
    Subgroup zs = z2(ts);
    Subgroup bs = b2(ts);
    const TriangularBasis& wz = zs.lattice();
    const TriangularBasis& wb = bs.lattice();
    const std::size_t n = ts.dim();

    // Express the coboundary lattice in cocycle-lattice coordinates: solve
    // z^T * WZ = WB.row(i) exactly by forward substitution (both triangular).
    // Non-divisibility here would mean B^2 is not inside Z^2, an assembly bug.
    IntMat ct(n, n);  // column i = coordinates of coboundary basis row i
    for (std::size_t i = 0; i < n; ++i) {
        if (wb.row(i) == wz.row(i)) {
            ct.at(i, i) = 1;
            continue;
        }
        std::vector<Int> z(n, 0);
        for (std::size_t j = i; j < n; ++j) {
            Int acc = wb.row(i)[j];
            for (std::size_t k = i; k < j; ++k)
                if (z[k] != 0) acc -= z[k] * wz.row(k)[j];
            Int q, r;
            mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), acc.get_mpz_t(), Int(wz.row(j)[j]).get_mpz_t());
            if (r != 0) throw std::logic_error("h2: coboundary lattice not contained in the cocycle lattice");
            z[j] = q;
        }
        for (std::size_t j = 0; j < n; ++j) ct.at(j, i) = z[j];
    }
    SnfOptions sopts;
    sopts.want_u = true;
    sopts.want_uinv = true;
    sopts.want_v = false;
    SnfResult res = snf(ct, sopts);

    std::vector<std::size_t> kept;
    std::vector<Int> mods;
    for (std::size_t i = 0; i < n; ++i)
        if (res.s.at(i, i) != 1) {
            kept.push_back(i);
            mods.push_back(res.s.at(i, i));
        }

    H2Group h;
    h.l = std::move(l);
    h.a = std::move(a);
    h.group = FinAbGroup::make(std::move(mods));
    h.ts = std::move(ts);
    h.z2_basis = std::make_shared<TriangularBasis>(wz);
    h.b2_basis = std::make_shared<TriangularBasis>(wb);
    h.class_matrix = IntMat(kept.size(), n);
    for (std::size_t r = 0; r < kept.size(); ++r)
        for (std::size_t c = 0; c < n; ++c) h.class_matrix.at(r, c) = res.u.at(kept[r], c);

    for (std::size_t r = 0; r < kept.size(); ++r) {
        std::vector<Int> vec(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            const Int& zi = res.uinv.at(i, kept[r]);
            if (zi == 0) continue;
            for (std::size_t j = 0; j < n; ++j) vec[j] += zi * wz.row(i)[j];
        }
        for (std::size_t j = 0; j < n; ++j) {
            Int m = h.ts.space->moduli()[j];
            mpz_fdiv_r(vec[j].get_mpz_t(), vec[j].get_mpz_t(), m.get_mpz_t());
        }
        h.reps.push_back(unflatten(h.ts, vec));
    }
    return h;
}

GroupElement H2Group::class_of(const Cocycle& c) const {
    require_match(c, ts);
    CocycleCheck check = is_cocycle(c);
    if (!check.ok) throw std::invalid_argument("class_of: not a cocycle: " + check.message);
    std::vector<Int> v = flatten(ts, c);
    std::vector<long> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = to_ll_checked(v[i]);
    std::vector<long> zc;
    if (!z2_basis->reduce(w, &zc)) throw std::logic_error("class_of: cocycle outside the cocycle lattice");
    std::vector<Int> out(group->rank(), 0);
    for (std::size_t r = 0; r < group->rank(); ++r)
        for (std::size_t cidx = 0; cidx < zc.size(); ++cidx)
            if (zc[cidx] != 0) out[r] += class_matrix.at(r, cidx) * zc[cidx];
    return element(group, std::move(out));
}

}  // namespace liecohom
