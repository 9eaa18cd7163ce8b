#pragma once

#include "liecohom/liering.hpp"

#include <string>
#include <vector>

namespace fixtures {

using namespace liecohom;

struct Fixture {
    std::string name;
    LieRingPtr ring;
};

inline LieRingPtr nonabelian4() {
    // order-4 ring on Z/2 + Z/2 with [g1, g2] = g2
    LieRing::ScMap sc;
    sc[{0, 1}] = {0, 1};
    return LieRing::make({2, 2}, sc);
}

inline std::vector<Fixture> catalog_small() {
    std::vector<Fixture> out;
    auto ab = [&](std::vector<Int> mods, const std::string& name) {
        out.push_back({name, abelian_ring(std::move(mods))});
    };
    ab({2}, "Z2");
    ab({3}, "Z3");
    ab({4}, "Z4");
    ab({2, 2}, "Z2xZ2");
    ab({5}, "Z5");
    ab({6}, "Z6");
    ab({7}, "Z7");
    ab({8}, "Z8");
    ab({2, 4}, "Z2xZ4");
    ab({2, 2, 2}, "Z2^3");
    out.push_back({"heis2", heisenberg(2)});
    out.push_back({"nonab4", nonabelian4()});
    return out;
}

inline std::vector<Fixture> catalog_all() {
    auto out = catalog_small();
    out.push_back({"heis3", heisenberg(3)});
    out.push_back({"heis2+Z2", direct_sum(*heisenberg(2), *abelian_ring({2}))});
    return out;
}

// Every Lie ring of order <= 4: the abelian types plus every valid
// structure-constant table found by exhaustive search.
inline std::vector<Fixture> full_catalog_order_le_4() {
    std::vector<Fixture> out;
    out.push_back({"trivial", abelian_ring({})});
    std::vector<std::vector<Int>> types = {{2}, {3}, {4}, {2, 2}};
    for (const auto& mods : types) {
        GroupPtr g = FinAbGroup::make(mods);
        std::string base = "order" + g->order().get_str();
        if (mods.size() < 2) {
            out.push_back({base + "-abelian", abelian_ring(mods)});
            continue;
        }
        // rank 2: enumerate all values of [g1, g2]
        auto elems = enumerate_elements(g);
        for (const auto& e : elems) {
            LieRing::ScMap sc;
            if (!e.is_zero()) sc[{0, 1}] = e.coeffs;
            try {
                LieRingPtr ring = LieRing::make(mods, sc);
                out.push_back({base + "-sc" + element_index(e).get_str(), ring});
            } catch (const LieValidationError&) {
            }
        }
    }
    return out;
}

// Invariant-factor chains d1 | d2 | ... with product in [2, max].
inline std::vector<std::vector<Int>> abelian_types_up_to(long max) {
    std::vector<std::vector<Int>> out;
    std::vector<Int> chain;
    auto rec = [&](auto&& self, long product, long min_factor) -> void {
        if (!chain.empty()) out.push_back(chain);
        for (long d = min_factor; product * d <= max; ++d) {
            if (!chain.empty() && d % to_ll_checked(chain.back()) != 0) continue;
            chain.emplace_back(d);
            self(self, product * d, d);
            chain.pop_back();
        }
    };
    rec(rec, 1, 2);
    return out;
}

}  // namespace fixtures
