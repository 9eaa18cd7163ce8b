#include <doctest.h>

#include "liecohom/abgroup.hpp"
#include "oracles.hpp"

#include <random>
#include <set>

using namespace liecohom;

namespace {

IntMat from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols) {
    IntMat m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    return m;
}

GroupElement el(const GroupPtr& g, std::vector<Int> c) { return element(g, std::move(c)); }

}  // namespace

TEST_CASE("group construction") {
    CHECK(FinAbGroup::make({2})->order() == 2);
    CHECK(FinAbGroup::make({4, 2})->order() == 8);
    GroupPtr g = FinAbGroup::make({1, 3});
    CHECK(g->order() == 3);
    CHECK(g->rank() == 2);
    CHECK(g->canonical_invariants() == std::vector<Int>{3});
    CHECK_THROWS_WITH_AS(FinAbGroup::make({2, 0}), doctest::Contains("index 1"), std::invalid_argument);
    CHECK(trivial_group()->order() == 1);
}

TEST_CASE("element arithmetic") {
    GroupPtr g = FinAbGroup::make({4, 2});
    CHECK(add(el(g, {3, 1}), el(g, {2, 1})) == el(g, {1, 0}));
    CHECK(neg(el(g, {1, 1})) == el(g, {3, 1}));
    CHECK(add(zero(g), el(g, {2, 1})) == el(g, {2, 1}));
    CHECK(element_order(el(g, {1, 0})) == 4);
    CHECK(element_order(el(g, {2, 1})) == 2);
    GroupPtr h = FinAbGroup::make({4});
    CHECK_THROWS_AS(add(el(g, {0, 0}), el(h, {0})), std::invalid_argument);
}

TEST_CASE("element enumeration is mixed-radix with zero first") {
    GroupPtr g = FinAbGroup::make({2, 3});
    auto elems = enumerate_elements(g);
    REQUIRE(elems.size() == 6);
    CHECK(elems[0].is_zero());
    CHECK(elems[1] == el(g, {0, 1}));
    CHECK(elems[3] == el(g, {1, 0}));
    for (std::size_t i = 0; i < elems.size(); ++i) CHECK(element_index(elems[i]) == i);
}

TEST_CASE("solve_congruences worked examples") {
    // {2x = 0} over Z/4
    GroupPtr z4 = FinAbGroup::make({4});
    Subgroup s = solve_congruences(from_rows({{2}}, 1), z4);
    CHECK(s.order() == 2);
    CHECK(s.contains(el(z4, {2})));
    CHECK_FALSE(s.contains(el(z4, {1})));
    // empty system over Z/2 + Z/2
    GroupPtr v4 = FinAbGroup::make({2, 2});
    CHECK(solve_congruences(IntMat(0, 2), v4).is_whole_group());
    // {x+y = 0, x-y = 0} over (Z/3)^2
    GroupPtr z33 = FinAbGroup::make({3, 3});
    Subgroup t = solve_congruences(from_rows({{1, 1}, {1, -1}}, 2), z33);
    auto brute = oracles::brute_congruence_solutions(from_rows({{1, 1}, {1, -1}}, 2), {3, 3});
    CHECK(t.order() == brute.size());
    CHECK(t.order() == 1);
}

TEST_CASE("solve_congruences agrees with brute force") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::vector<std::vector<long>> spaces = {{2, 2, 2}, {3, 3}, {4, 2}, {6}, {2, 3, 4}};
    auto well_defined = [](const IntMat& rows, const std::vector<long>& mods) {
        for (std::size_t r = 0; r < rows.rows(); ++r) {
            Int m = 1;
            for (std::size_t c = 0; c < mods.size(); ++c)
                if (rows.at(r, c) != 0) m = lcm(m, Int(mods[c]));
            for (std::size_t c = 0; c < mods.size(); ++c)
                if ((rows.at(r, c) * mods[c]) % m != 0) return false;
        }
        return true;
    };
    for (const auto& mods : spaces) {
        std::vector<Int> m(mods.begin(), mods.end());
        GroupPtr g = FinAbGroup::make(m);
        int done = 0;
        while (done < 20) {
            IntMat rows(2, mods.size());
            for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t c = 0; c < mods.size(); ++c) rows.at(r, c) = coeff(rng);
            if (!well_defined(rows, mods)) continue;
            ++done;
            Subgroup s = solve_congruences(rows, g);
            auto brute = oracles::brute_congruence_solutions(rows, mods);
            CHECK(s.order() == brute.size());
            for (const auto& x : brute) {
                std::vector<Int> xi(x.begin(), x.end());
                CHECK(s.contains(element(g, xi)));
            }
        }
    }
}

TEST_CASE("solve_congruences rejects systems that are not well defined") {
    // x + y over Z/2 + Z/4 is not a function of the classes
    GroupPtr g = FinAbGroup::make({2, 4});
    CHECK_THROWS_AS(solve_congruences(from_rows({{1, 1}}, 2), g), std::invalid_argument);
    CHECK_THROWS_AS(solve_congruences(from_rows({{1}}, 1), g), std::invalid_argument);  // dimension mismatch
}

TEST_CASE("hom_group worked examples and brute counts") {
    auto count = [](const GroupPtr& a, const GroupPtr& b) { return hom_group(a, b).group->order(); };
    CHECK(count(FinAbGroup::make({2}), FinAbGroup::make({4})) == 2);
    CHECK(count(FinAbGroup::make({3}), FinAbGroup::make({2})) == 1);
    GroupPtr v4 = FinAbGroup::make({2, 2});
    GroupPtr z2 = FinAbGroup::make({2});
    HomGroup h = hom_group(v4, z2);
    CHECK(h.group->canonical_invariants() == std::vector<Int>{2, 2});
    CHECK(h.group->order() == oracles::brute_hom_count(v4, z2));

    std::vector<GroupPtr> samples = {FinAbGroup::make({2}), FinAbGroup::make({4}), FinAbGroup::make({2, 2}),
                                     FinAbGroup::make({6}), FinAbGroup::make({3, 3}), trivial_group()};
    for (const auto& a : samples)
        for (const auto& b : samples) CHECK(hom_group(a, b).group->order() == oracles::brute_hom_count(a, b));
}

TEST_CASE("hom_group correspondence round-trips") {
    GroupPtr a = FinAbGroup::make({4, 2});
    GroupPtr b = FinAbGroup::make({2, 6});
    HomGroup h = hom_group(a, b);
    for (const auto& e : enumerate_elements(h.group)) {
        AbHom hom = h.to_hom(e);
        CHECK(h.from_hom(hom) == e);
        // homomorphism property on a few pairs
        auto elems = enumerate_elements(a);
        for (std::size_t i = 0; i < elems.size(); i += 3)
            for (std::size_t j = 0; j < elems.size(); j += 5)
                CHECK(hom.apply(add(elems[i], elems[j])) == add(hom.apply(elems[i]), hom.apply(elems[j])));
    }
}

TEST_CASE("kernel and image") {
    GroupPtr z4 = FinAbGroup::make({4});
    AbHom doubling = AbHom::make(z4, z4, from_rows({{2}}, 1));
    auto [ker, im] = kernel_image(doubling);
    CHECK(ker.order() == 2);
    CHECK(im.order() == 2);
    CHECK(ker.contains(el(z4, {2})));
    CHECK(im.contains(el(z4, {2})));

    GroupPtr g = FinAbGroup::make({4, 2});
    AbHom zero_map = AbHom::zero(g, z4);
    auto [kz, iz] = kernel_image(zero_map);
    CHECK(kz.is_whole_group());
    CHECK(iz.is_trivial());

    GroupPtr z2 = FinAbGroup::make({2});
    AbHom proj = AbHom::make(g, z2, from_rows({{0, 1}}, 2));
    auto [kp, ip] = kernel_image(proj);
    CHECK(kp.order() == 4);
    CHECK(ip.is_whole_group());
}

TEST_CASE("kernel times image equals domain order, randomly") {
    std::mt19937 rng(99);
    std::vector<std::vector<Int>> doms = {{2, 4}, {3, 3}, {6}, {2, 2, 2}, {8}};
    std::vector<std::vector<Int>> cods = {{2}, {4, 2}, {3}, {12}};
    for (const auto& dm : doms)
        for (const auto& cm : cods) {
            GroupPtr d = FinAbGroup::make(dm);
            GroupPtr c = FinAbGroup::make(cm);
            for (int iter = 0; iter < 5; ++iter) {
                IntMat m(c->rank(), d->rank());
                bool ok = true;
                for (std::size_t r = 0; r < m.rows(); ++r)
                    for (std::size_t cc = 0; cc < m.cols(); ++cc) {
                        // random well-defined entry
                        Int g = gcd(d->moduli()[cc], c->moduli()[r]);
                        Int step = c->moduli()[r] / g;
                        std::uniform_int_distribution<long> pick(0, to_ll_checked(g) - 1);
                        m.at(r, cc) = step * pick(rng);
                    }
                if (!ok) continue;
                AbHom h = AbHom::make(d, c, m);
                auto [ker, im] = kernel_image(h);
                CHECK(ker.order() * im.order() == d->order());
            }
        }
}

TEST_CASE("quotient worked examples") {
    GroupPtr g = FinAbGroup::make({4, 2});
    Subgroup s(g, {el(g, {2, 0})});
    QuotientResult q = quotient(g, s);
    CHECK(q.group->canonical_invariants() == std::vector<Int>{2, 2});
    CHECK(q.group->order() * s.order() == g->order());
    // projection surjective with kernel exactly s
    auto [ker, im] = kernel_image(q.projection);
    CHECK(im.is_whole_group());
    CHECK(ker == s);
    // lifts project to the generators
    for (std::size_t i = 0; i < q.group->rank(); ++i)
        CHECK(q.projection.apply(q.lifts[i]) == generator(q.group, i));

    CHECK(quotient(g, trivial_subgroup(g)).group->order() == 8);
    CHECK(quotient(g, whole_subgroup(g)).group->order() == 1);
}

TEST_CASE("subgroup operations") {
    GroupPtr g = FinAbGroup::make({4, 2});
    Subgroup s1(g, {el(g, {2, 0})});
    Subgroup s2(g, {el(g, {2, 0}), zero(g)});
    CHECK(s1 == s2);
    CHECK_FALSE(s1.contains(el(g, {1, 0})));
    GroupPtr v4 = FinAbGroup::make({2, 2});
    Subgroup diag(v4, {el(v4, {1, 1})});
    Subgroup whole = whole_subgroup(v4);
    CHECK(diag.order() == 2);
    CHECK_FALSE(diag == whole);
    CHECK(whole.contains(diag));
    CHECK_FALSE(diag.contains(whole));
    GroupPtr other = FinAbGroup::make({2, 2});
    CHECK(diag == Subgroup(other, {el(other, {1, 1})}));  // same presentation counts as same parent
}

TEST_CASE("subgroup_as_group presents the subgroup faithfully") {
    GroupPtr g = FinAbGroup::make({8, 2});
    Subgroup s(g, {el(g, {2, 1})});
    SubgroupPresentation pres = subgroup_as_group(s);
    CHECK(pres.group->order() == s.order());
    // inclusion is injective with image s
    auto [ker, im] = kernel_image(pres.inclusion);
    CHECK(ker.is_trivial());
    CHECK(im == s);
    for (const auto& e : enumerate_elements(pres.group)) {
        GroupElement x = pres.inclusion.apply(e);
        auto back = pres.coordinates(x);
        REQUIRE(back.has_value());
        CHECK(*back == e);
    }
    CHECK_FALSE(pres.coordinates(el(g, {1, 0})).has_value());
}

TEST_CASE("enumerate_subgroups finds the full lattice") {
    CHECK(enumerate_subgroups(FinAbGroup::make({2, 2})).size() == 5);
    CHECK(enumerate_subgroups(FinAbGroup::make({4})).size() == 3);
    CHECK(enumerate_subgroups(FinAbGroup::make({2, 2, 2})).size() == 16);
    CHECK(enumerate_subgroups(FinAbGroup::make({6})).size() == 4);
}
