#pragma once

// Independent reference computations used only to check the library:
// determinants by fraction-free elimination, solution sets and cocycle
// counts by exhaustive enumeration.

#include "liecohom/cohomology.hpp"

#include <map>
#include <set>
#include <vector>

namespace oracles {

using namespace liecohom;

// Bareiss fraction-free elimination; square matrices.
inline Int bareiss_det(const IntMat& m0) {
    const std::size_t n = m0.rows();
    if (n != m0.cols()) throw std::invalid_argument("bareiss_det: square matrices only");
    if (n == 0) return 1;
    IntMat m = m0;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m.at(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            m.swap_rows(k, swap);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

// All solutions of rows.x = 0 in the product of cyclic groups, where each
// row is taken modulo the lcm of the moduli of the unknowns it touches.
inline std::set<std::vector<long>> brute_congruence_solutions(const IntMat& rows, const std::vector<long>& moduli) {
    std::set<std::vector<long>> out;
    std::vector<long> x(moduli.size(), 0);
    std::vector<Int> rowmod(rows.rows(), 1);
    for (std::size_t i = 0; i < rows.rows(); ++i)
        for (std::size_t j = 0; j < moduli.size(); ++j)
            if (rows.at(i, j) != 0) rowmod[i] = lcm(rowmod[i], Int(moduli[j]));
    for (;;) {
        bool ok = true;
        for (std::size_t i = 0; ok && i < rows.rows(); ++i) {
            Int acc = 0;
            for (std::size_t j = 0; j < moduli.size(); ++j) acc += rows.at(i, j) * x[j];
            if (acc % rowmod[i] != 0) ok = false;
        }
        if (ok) out.insert(x);
        std::size_t p = 0;
        while (p < moduli.size() && ++x[p] == moduli[p]) {
            x[p] = 0;
            ++p;
        }
        if (p == moduli.size()) break;
        if (moduli.empty()) break;
    }
    return out;
}

// Count of homomorphisms A -> B by enumerating generator images.
inline std::size_t brute_hom_count(const GroupPtr& a, const GroupPtr& b) {
    auto belems = enumerate_elements(b);
    std::size_t count = 0;
    std::vector<std::size_t> pick(a->rank(), 0);
    for (;;) {
        bool ok = true;
        for (std::size_t j = 0; ok && j < a->rank(); ++j)
            if (!scalar_mul(a->moduli()[j], belems[pick[j]]).is_zero()) ok = false;
        if (ok) ++count;
        std::size_t p = 0;
        while (p < a->rank() && ++pick[p] == belems.size()) {
            pick[p] = 0;
            ++p;
        }
        if (p == a->rank()) break;
        if (a->rank() == 0) break;
    }
    return a->rank() == 0 ? 1 : count;
}

// Count of Lie homomorphisms L -> A (A abelian): additive maps on the
// generators that kill every structure constant.
inline std::size_t brute_lie_hom_count(const LieRingPtr& l, const GroupPtr& a) {
    auto aelems = enumerate_elements(a);
    const std::size_t r = l->rank();
    std::size_t count = 0;
    std::vector<std::size_t> pick(r, 0);
    for (;;) {
        bool ok = true;
        for (std::size_t j = 0; ok && j < r; ++j)
            if (!scalar_mul(l->additive()->moduli()[j], aelems[pick[j]]).is_zero()) ok = false;
        for (const auto& [i, j] : l->nonzero_pairs()) {
            if (!ok) break;
            GroupElement img = zero(a);
            for (std::size_t k = 0; k < r; ++k)
                img = add(img, scalar_mul(l->sc(i, j).coeffs[k], aelems[pick[k]]));
            if (!img.is_zero()) ok = false;
        }
        if (ok) ++count;
        std::size_t p = 0;
        while (p < r && ++pick[p] == aelems.size()) {
            pick[p] = 0;
            ++p;
        }
        if (p == r) break;
        if (r == 0) break;
    }
    return r == 0 ? 1 : count;
}

// Literal check of the five conditions for full f, g tables (element-index
// indexed); used by the exhaustive counters below.
inline bool check_conditions(const RingTables& t, const std::vector<std::size_t>& f,
                             const std::vector<std::size_t>& g, const std::vector<GroupElement>& aelems,
                             const std::vector<std::vector<std::size_t>>& aadd,
                             const std::vector<std::size_t>& aneg) {
    const std::size_t n = t.size;
    auto F = [&](std::size_t x, std::size_t y) { return f[x * n + y]; };
    auto G = [&](std::size_t x, std::size_t y) { return g[x * n + y]; };
    auto s = [&](std::size_t u, std::size_t v) { return aadd[u][v]; };
    for (std::size_t x = 0; x < n; ++x)
        if (F(x, x) != 0) return false;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (G(x, y) != G(y, x)) return false;
            for (std::size_t z = 0; z < n; ++z) {
                if (F(t.add(x, y), z) != s(s(F(x, z), F(y, z)), G(t.brk(x, z), t.brk(y, z)))) return false;
                if (F(x, t.add(y, z)) != s(s(F(x, y), F(x, z)), G(t.brk(x, y), t.brk(x, z)))) return false;
                std::size_t yz = t.brk(y, z), xy = t.brk(x, y), zx = t.brk(z, x);
                std::size_t yzx = t.brk(y, zx);
                std::size_t lhs = s(s(F(x, yz), F(z, xy)), F(y, zx));
                std::size_t rhs = aneg[s(G(t.brk(x, yz), t.brk(z, xy)), G(t.neg(yzx), yzx))];
                if (lhs != rhs) return false;
                if (s(G(t.add(x, y), z), G(x, y)) != s(G(x, t.add(y, z)), G(y, z))) return false;
            }
        }
    return true;
}

struct BruteCocycleCounts {
    std::size_t z2 = 0;
    std::size_t b2 = 0;
};

// Exhaustive |Z^2| and |B^2| over all table pairs. Feasible when
// |A|^(2 |L|^2) is small; use brute_cocycle_counts_abelian otherwise.
inline BruteCocycleCounts brute_cocycle_counts(const LieRingPtr& l, const GroupPtr& a) {
    RingTables t = RingTables::build(l);
    auto aelems = enumerate_elements(a);
    const std::size_t n = t.size, m = aelems.size();
    std::vector<std::vector<std::size_t>> aadd(m, std::vector<std::size_t>(m));
    std::vector<std::size_t> aneg(m);
    for (std::size_t i = 0; i < m; ++i) {
        aneg[i] = element_index(neg(aelems[i])).get_ui();
        for (std::size_t j = 0; j < m; ++j) aadd[i][j] = element_index(add(aelems[i], aelems[j])).get_ui();
    }
    BruteCocycleCounts counts;
    const std::size_t cells = 2 * n * n;
    std::vector<std::size_t> table(cells, 0);
    for (;;) {
        std::vector<std::size_t> f(table.begin(), table.begin() + n * n);
        std::vector<std::size_t> g(table.begin() + n * n, table.end());
        if (check_conditions(t, f, g, aelems, aadd, aneg)) ++counts.z2;
        std::size_t p = 0;
        while (p < cells && ++table[p] == m) {
            table[p] = 0;
            ++p;
        }
        if (p == cells) break;
    }
    // Coboundaries: all pointed maps t.
    std::set<std::vector<std::size_t>> seen;
    std::vector<std::size_t> tv(n, 0);
    for (;;) {
        std::vector<std::size_t> flat(cells);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                flat[x * n + y] = aneg[tv[t.brk(x, y)]];
                flat[n * n + x * n + y] = aadd[aadd[tv[x]][tv[y]]][aneg[tv[t.add(x, y)]]];
            }
        seen.insert(flat);
        std::size_t p = 1;
        while (p < n && ++tv[p] == m) {
            tv[p] = 0;
            ++p;
        }
        if (p == n || n == 1) break;
    }
    counts.b2 = seen.size();
    return counts;
}

// Exhaustive counts for abelian L: the conditions only couple f and g
// through g(0,0), so f and g tables are enumerated separately.
inline BruteCocycleCounts brute_cocycle_counts_abelian(const LieRingPtr& l, const GroupPtr& a) {
    if (!l->is_abelian()) throw std::invalid_argument("oracle needs an abelian ring");
    RingTables t = RingTables::build(l);
    auto aelems = enumerate_elements(a);
    const std::size_t n = t.size, m = aelems.size();
    std::vector<std::vector<std::size_t>> aadd(m, std::vector<std::size_t>(m));
    std::vector<std::size_t> aneg(m);
    for (std::size_t i = 0; i < m; ++i) {
        aneg[i] = element_index(neg(aelems[i])).get_ui();
        for (std::size_t j = 0; j < m; ++j) aadd[i][j] = element_index(add(aelems[i], aelems[j])).get_ui();
    }

    // f-table counts per value of gamma = g(0,0); all brackets are 0.
    auto f_count = [&](std::size_t gamma) {
        std::size_t count = 0;
        std::vector<std::size_t> f(n * n, 0);
        for (;;) {
            bool ok = true;
            for (std::size_t x = 0; ok && x < n; ++x) {
                if (f[x * n + x] != 0) ok = false;
                for (std::size_t y = 0; ok && y < n; ++y)
                    for (std::size_t z = 0; ok && z < n; ++z) {
                        if (f[t.add(x, y) * n + z] != aadd[aadd[f[x * n + z]][f[y * n + z]]][gamma]) ok = false;
                        if (f[x * n + t.add(y, z)] != aadd[aadd[f[x * n + y]][f[x * n + z]]][gamma]) ok = false;
                        std::size_t lhs = aadd[aadd[f[x * n]][f[z * n]]][f[y * n]];
                        if (lhs != aneg[aadd[gamma][gamma]]) ok = false;
                    }
            }
            if (ok) ++count;
            std::size_t p = 0;
            while (p < n * n && ++f[p] == m) {
                f[p] = 0;
                ++p;
            }
            if (p == n * n) break;
        }
        return count;
    };
    std::map<std::size_t, std::size_t> f_memo;

    BruteCocycleCounts counts;
    std::vector<std::size_t> g(n * n, 0);
    for (;;) {
        bool ok = true;
        for (std::size_t x = 0; ok && x < n; ++x)
            for (std::size_t y = 0; ok && y < n; ++y) {
                if (g[x * n + y] != g[y * n + x]) ok = false;
                for (std::size_t z = 0; ok && z < n; ++z)
                    if (aadd[g[t.add(x, y) * n + z]][g[x * n + y]] != aadd[g[x * n + t.add(y, z)]][g[y * n + z]])
                        ok = false;
            }
        if (ok) {
            std::size_t gamma = g[0];
            if (!f_memo.count(gamma)) f_memo[gamma] = f_count(gamma);
            counts.z2 += f_memo[gamma];
        }
        std::size_t p = 0;
        while (p < n * n && ++g[p] == m) {
            g[p] = 0;
            ++p;
        }
        if (p == n * n) break;
    }

    std::set<std::vector<std::size_t>> seen;
    std::vector<std::size_t> tv(n, 0);
    for (;;) {
        std::vector<std::size_t> flat(2 * n * n);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                flat[x * n + y] = aneg[tv[t.brk(x, y)]];
                flat[n * n + x * n + y] = aadd[aadd[tv[x]][tv[y]]][aneg[tv[t.add(x, y)]]];
            }
        seen.insert(flat);
        std::size_t p = 1;
        while (p < n && ++tv[p] == m) {
            tv[p] = 0;
            ++p;
        }
        if (p == n || n == 1) break;
    }
    counts.b2 = seen.size();
    return counts;
}

}  // namespace oracles
