#include "liecohom/schur.hpp"

#include <stdexcept>

namespace liecohom {

namespace {

struct StableH2 {
    std::vector<Int> invariants;
    H2Group h;
};

StableH2 stable_h2(const LieRingPtr& l, const Int& n, const CohomOptions& opts) {
    Int e = l->additive()->exponent();
    GroupPtr small = FinAbGroup::make({n});
    GroupPtr big = FinAbGroup::make({n * e});
    H2Group hs = h2(l, small, opts);
    H2Group hb = h2(l, big, opts);

    // Push each representative through the coefficient inclusion x -> e*x.
    std::vector<GroupElement> images;
    for (const auto& rep : hs.reps) {
        Cocycle mapped{l, big, {}, {}};
        mapped.f.reserve(rep.f.size());
        mapped.g.reserve(rep.g.size());
        for (const auto& v : rep.f) mapped.f.push_back(element(big, {e * v.coeffs[0]}));
        for (const auto& v : rep.g) mapped.g.push_back(element(big, {e * v.coeffs[0]}));
        images.push_back(hb.class_of(mapped));
    }
    Subgroup image(hb.group, std::move(images));
    SubgroupPresentation pres = subgroup_as_group(image);
    return StableH2{pres.group->canonical_invariants(), std::move(hs)};
}

}  // namespace

std::vector<Int> stable_h2_invariants(LieRingPtr l, const Int& n, const CohomOptions& opts) {
    return stable_h2(l, n, opts).invariants;
}

MultiplierResult schur_multiplier(LieRingPtr l, const CohomOptions& opts) {
    Int e = l->additive()->exponent();
    Int n0 = l->order() * e;
    MultiplierResult res;
    res.schedule = {n0, 2 * n0, 6 * n0};
    StableH2 last;
    for (const Int& n : res.schedule) {
        last = stable_h2(l, n, opts);
        res.factors_per_n.push_back(last.invariants);
    }
    res.stable = res.factors_per_n[0] == res.factors_per_n[1] && res.factors_per_n[1] == res.factors_per_n[2];
    res.group = FinAbGroup::make(res.factors_per_n.back());
    res.witness = std::move(last.h);
    return res;
}

GroupPtr exterior_square(const std::vector<Int>& moduli) {
    for (std::size_t i = 0; i + 1 < moduli.size(); ++i)
        if (moduli[i] < 1 || moduli[i + 1] % moduli[i] != 0)
            throw std::invalid_argument("exterior_square: moduli must be in invariant-factor form");
    std::vector<Int> out;
    for (std::size_t i = 0; i < moduli.size(); ++i)
        for (std::size_t j = i + 1; j < moduli.size(); ++j) {
            Int g = gcd(moduli[i], moduli[j]);
            if (g != 1) out.push_back(g);
        }
    return FinAbGroup::make(std::move(out));
}

}  // namespace liecohom
