#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

#include <random>

using namespace liecohom;

TEST_CASE("lie_new validation") {
    for (long p : {2, 3, 5}) {
        LieRingPtr l = abelian_ring({p});
        CHECK(l->is_abelian());
        CHECK(l->order() == p);
        LieRingPtr h = heisenberg(p);
        CHECK_FALSE(h->is_abelian());
        CHECK(h->order() == p * p * p);
    }
    // 2*g2 != 0 in Z/4 breaks well-definedness of [g1, g2] = g2
    LieRing::ScMap sc;
    sc[{0, 1}] = {0, 1};
    CHECK_THROWS_WITH_AS(LieRing::make({2, 4}, sc), doctest::Contains("order incompatibility"), LieValidationError);
    // a Jacobi failure: [g1,g2]=g3 and [g1,g3]=g1 leave a nonzero Jacobiator
    LieRing::ScMap bad;
    bad[{0, 1}] = {0, 0, 1};
    bad[{0, 2}] = {1, 0, 0};
    CHECK_THROWS_WITH_AS(LieRing::make({3, 3, 3}, bad), doctest::Contains("Jacobi"), LieValidationError);
    // out-of-range index diagnostics
    LieRing::ScMap oob;
    oob[{1, 0}] = {0, 0};
    CHECK_THROWS_AS(LieRing::make({2, 2}, oob), LieValidationError);
}

TEST_CASE("bracket evaluation") {
    LieRingPtr h = heisenberg(2);
    GroupPtr g = h->additive();
    GroupElement g1 = generator(g, 0), g2 = generator(g, 1), g3 = generator(g, 2);
    CHECK(h->bracket(g1, g2) == g3);
    CHECK(h->bracket(add(g1, g2), g2) == g3);
    CHECK(h->bracket(g2, g1) == g3);  // -g3 = g3 over Z/2
    LieRingPtr h3 = heisenberg(3);
    CHECK(h3->bracket(generator(h3->additive(), 1), generator(h3->additive(), 0)) ==
          scalar_mul(2, generator(h3->additive(), 2)));
    LieRingPtr ab = abelian_ring({4, 2});
    for (const auto& x : enumerate_elements(ab->additive()))
        for (const auto& y : enumerate_elements(ab->additive())) CHECK(ab->bracket(x, y).is_zero());
}

TEST_CASE("ring axioms hold on full enumeration of the catalog") {
    for (const auto& fx : fixtures::catalog_small()) {
        if (fx.ring->order() > 16) continue;
        auto elems = enumerate_elements(fx.ring->additive());
        for (const auto& x : elems)
            for (const auto& y : elems) {
                CHECK(fx.ring->bracket(x, x).is_zero());
                CHECK(fx.ring->bracket(add(x, y), y) == add(fx.ring->bracket(x, y), fx.ring->bracket(y, y)));
                for (const auto& z : elems) {
                    GroupElement jac = add(add(fx.ring->bracket(x, fx.ring->bracket(y, z)),
                                               fx.ring->bracket(z, fx.ring->bracket(x, y))),
                                           fx.ring->bracket(y, fx.ring->bracket(z, x)));
                    CHECK(jac.is_zero());
                }
            }
    }
}

TEST_CASE("center worked examples") {
    LieRingPtr ab = abelian_ring({4, 2});
    CHECK(center(*ab).sub.is_whole_group());
    for (long p : {2, 3}) {
        LieIdeal z = center(*heisenberg(p));
        CHECK(z.sub.order() == p);
        CHECK(z.central);
        CHECK(z.sub.contains(generator(heisenberg(p)->additive(), 2)));
    }
    LieRingPtr sum = direct_sum(*heisenberg(2), *abelian_ring({2}));
    CHECK(center(*sum).sub.order() == 4);
    CHECK(center(*fixtures::nonabelian4()).sub.is_trivial());
}

TEST_CASE("derived subring worked examples") {
    CHECK(derived(*abelian_ring({6})).sub.is_trivial());
    for (long p : {2, 3}) {
        LieIdeal d = derived(*heisenberg(p));
        CHECK(d.sub.order() == p);
        CHECK(d.sub.contains(generator(heisenberg(p)->additive(), 2)));
    }
    LieRingPtr l1 = heisenberg(2);
    LieRingPtr l2 = fixtures::nonabelian4();
    LieRingPtr sum = direct_sum(*l1, *l2);
    CHECK(derived(*sum).sub.order() == derived(*l1).sub.order() * derived(*l2).sub.order());
}

TEST_CASE("center and derived are ideals") {
    for (const auto& fx : fixtures::catalog_all()) {
        CHECK(is_ideal(*fx.ring, center(*fx.ring).sub));
        CHECK(is_ideal(*fx.ring, derived(*fx.ring).sub));
        CHECK(is_central_subgroup(*fx.ring, center(*fx.ring).sub));
    }
    // the span of g2 in nonabelian4 is an ideal but not central
    LieRingPtr n4 = fixtures::nonabelian4();
    LieIdeal i = make_ideal(*n4, {generator(n4->additive(), 1)});
    CHECK(i.ideal);
    CHECK_FALSE(i.central);
    // the span of g1 is not an ideal: [g2, g1] = g2 falls outside
    CHECK_THROWS_AS(make_ideal(*n4, {generator(n4->additive(), 0)}), std::invalid_argument);
}

TEST_CASE("quotient_lie worked examples") {
    LieRingPtr h = heisenberg(2);
    LieQuotient q = quotient_lie(h, center(*h));
    CHECK(q.ring->is_abelian());
    CHECK(q.ring->additive()->canonical_invariants() == std::vector<Int>{2, 2});
    // projection is a surjective Lie homomorphism with kernel the ideal
    auto [ker, im] = kernel_image(q.projection);
    CHECK(im.is_whole_group());
    CHECK(ker == center(*h).sub);
    for (const auto& x : enumerate_elements(h->additive()))
        for (const auto& y : enumerate_elements(h->additive()))
            CHECK(q.projection.apply(h->bracket(x, y)) ==
                  q.ring->bracket(q.projection.apply(x), q.projection.apply(y)));

    CHECK(quotient_lie(h, LieIdeal{trivial_subgroup(h->additive()), true, true}).ring->order() == 8);
    CHECK(quotient_lie(h, make_ideal(*h, {generator(h->additive(), 0), generator(h->additive(), 1),
                                          generator(h->additive(), 2)}))
              .ring->order() == 1);
    // refuse non-ideals
    LieIdeal fake{Subgroup(h->additive(), {generator(h->additive(), 0)}), true, false};
    CHECK_THROWS_AS(quotient_lie(h, fake), std::invalid_argument);
}

TEST_CASE("hom_lie_to_abelian worked examples and brute counts") {
    GroupPtr z2 = FinAbGroup::make({2});
    CHECK(hom_lie_to_abelian(abelian_ring({2}), z2).group->order() == 2);
    LieHomGroup hh = hom_lie_to_abelian(heisenberg(2), z2);
    CHECK(hh.group->canonical_invariants() == std::vector<Int>{2, 2});
    CHECK(hom_lie_to_abelian(heisenberg(2), trivial_group()).group->order() == 1);

    std::vector<GroupPtr> coeffs = {z2, FinAbGroup::make({4}), FinAbGroup::make({3}), FinAbGroup::make({2, 2})};
    for (const auto& fx : fixtures::catalog_small()) {
        if (fx.ring->order() > 8) continue;
        for (const auto& a : coeffs)
            CHECK(hom_lie_to_abelian(fx.ring, a).group->order() == oracles::brute_lie_hom_count(fx.ring, a));
    }
}

TEST_CASE("hom_lie_to_abelian correspondence kills brackets and round-trips") {
    LieRingPtr l = fixtures::nonabelian4();
    GroupPtr a = FinAbGroup::make({4});
    LieHomGroup hg = hom_lie_to_abelian(l, a);
    for (const auto& e : enumerate_elements(hg.group)) {
        AbHom hom = hg.to_hom(e);
        for (const auto& [i, j] : l->nonzero_pairs()) CHECK(hom.apply(l->sc(i, j)).is_zero());
        CHECK(hg.from_hom(hom) == e);
    }
}

TEST_CASE("direct_sum structure") {
    LieRingPtr s = direct_sum(*heisenberg(2), *abelian_ring({2}));
    CHECK(s->order() == 16);
    CHECK(s->rank() == 4);
    CHECK(s->bracket(generator(s->additive(), 0), generator(s->additive(), 1)) == generator(s->additive(), 2));
    CHECK(s->bracket(generator(s->additive(), 0), generator(s->additive(), 3)).is_zero());
    LieRingPtr pp = direct_sum(*abelian_ring({3}), *abelian_ring({3}));
    CHECK(pp->is_abelian());
    CHECK(pp->order() == 9);
}

TEST_CASE("randomized axiom checks over the fixture catalog") {
    std::mt19937 rng(20250809);
    for (const auto& fx : fixtures::catalog_all()) {
        auto elems = enumerate_elements(fx.ring->additive());
        std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
        for (int iter = 0; iter < 200; ++iter) {
            const auto& x = elems[pick(rng)];
            const auto& y = elems[pick(rng)];
            const auto& z = elems[pick(rng)];
            CHECK(fx.ring->bracket(x, x).is_zero());
            CHECK(fx.ring->bracket(add(x, y), z) == add(fx.ring->bracket(x, z), fx.ring->bracket(y, z)));
            CHECK(fx.ring->bracket(x, add(y, z)) == add(fx.ring->bracket(x, y), fx.ring->bracket(x, z)));
            GroupElement jac = add(add(fx.ring->bracket(x, fx.ring->bracket(y, z)),
                                       fx.ring->bracket(z, fx.ring->bracket(x, y))),
                                   fx.ring->bracket(y, fx.ring->bracket(z, x)));
            CHECK(jac.is_zero());
        }
    }
}
