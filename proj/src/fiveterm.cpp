#include "liecohom/fiveterm.hpp"

#include <stdexcept>

namespace liecohom {

FiveTerm::FiveTerm(LieRingPtr l, LieIdeal h, GroupPtr a, const CohomOptions& opts, SectionRule rule)
    : l_(std::move(l)), h_(std::move(h)), a_(std::move(a)) {
    if (!h_.central || !is_central_subgroup(*l_, h_.sub))
        throw std::domain_error("five-term: H must be a central ideal of L");
    hsub_ = subgroup_as_group(h_.sub);
    lq_ = quotient_lie(l_, h_);
    hom_lh_ = hom_lie_to_abelian(lq_.ring, a_);
    hom_l_ = hom_lie_to_abelian(l_, a_);
    hom_h_ = hom_group(hsub_.group, a_);
    h2_lh_ = h2(lq_.ring, a_, opts);
    h2_l_ = h2(l_, a_, opts);

    auto lelems = enumerate_elements(l_->additive(), 1u << 12);
    auto qelems = enumerate_elements(lq_.ring->additive(), 1u << 12);
    proj_idx_.resize(lelems.size());
    mu_.assign(qelems.size(), zero(l_->additive()));
    std::vector<bool> have(qelems.size(), false);
    for (std::size_t i = 0; i < lelems.size(); ++i) {
        std::size_t q = element_index(lq_.projection.apply(lelems[i])).get_ui();
        proj_idx_[i] = q;
        if (rule == SectionRule::EnumerationLeast) {
            if (!have[q]) {
                have[q] = true;
                mu_[q] = lelems[i];
            }
        } else {
            // greatest representative, except 0 which must lift to 0
            if (q == 0 && !have[q]) {
                have[q] = true;
                continue;  // mu_[0] stays 0
            }
            if (q != 0) {
                have[q] = true;
                mu_[q] = lelems[i];
            }
        }
    }
    for (bool b : have)
        if (!b) throw std::logic_error("five-term: projection misses a coset");

    // H-valued cocycle of 0 -> H -> L -> L/H -> 0 for the chosen section.
    RingTables qt = RingTables::build(lq_.ring, 1u << 12);
    const std::size_t nq = qt.size;
    f_h_.reserve(nq * nq);
    g_h_.reserve(nq * nq);
    for (std::size_t s1 = 0; s1 < nq; ++s1)
        for (std::size_t s2 = 0; s2 < nq; ++s2) {
            GroupElement fv = sub(l_->bracket(mu_[s1], mu_[s2]), mu_[qt.brk(s1, s2)]);
            GroupElement gv = sub(add(mu_[s1], mu_[s2]), mu_[qt.add(s1, s2)]);
            auto fc = hsub_.coordinates(fv);
            auto gc = hsub_.coordinates(gv);
            if (!fc || !gc) throw std::logic_error("five-term: section defect lands outside H");
            f_h_.push_back(std::move(*fc));
            g_h_.push_back(std::move(*gc));
        }

    // Group-level maps, one generator image per column.
    {
        IntMat m(hom_l_.group->rank(), hom_lh_.group->rank());
        for (std::size_t c = 0; c < hom_lh_.group->rank(); ++c) {
            GroupElement img = hom_l_.from_hom(inf_hom(hom_lh_.to_hom(generator(hom_lh_.group, c))));
            for (std::size_t r = 0; r < hom_l_.group->rank(); ++r) m.at(r, c) = img.coeffs[r];
        }
        map_inf_hom_ = AbHom::make(hom_lh_.group, hom_l_.group, std::move(m));
    }
    {
        IntMat m(hom_h_.group->rank(), hom_l_.group->rank());
        for (std::size_t c = 0; c < hom_l_.group->rank(); ++c) {
            GroupElement img = hom_h_.from_hom(res(hom_l_.to_hom(generator(hom_l_.group, c))));
            for (std::size_t r = 0; r < hom_h_.group->rank(); ++r) m.at(r, c) = img.coeffs[r];
        }
        map_res_ = AbHom::make(hom_l_.group, hom_h_.group, std::move(m));
    }
    {
        IntMat m(h2_lh_.group->rank(), hom_h_.group->rank());
        for (std::size_t c = 0; c < hom_h_.group->rank(); ++c) {
            GroupElement img = tra(hom_h_.to_hom(generator(hom_h_.group, c)));
            for (std::size_t r = 0; r < h2_lh_.group->rank(); ++r) m.at(r, c) = img.coeffs[r];
        }
        map_tra_ = AbHom::make(hom_h_.group, h2_lh_.group, std::move(m));
    }
    {
        IntMat m(h2_l_.group->rank(), h2_lh_.group->rank());
        for (std::size_t c = 0; c < h2_lh_.group->rank(); ++c) {
            GroupElement img = h2_l_.class_of(pullback(h2_lh_.reps[c]));
            for (std::size_t r = 0; r < h2_l_.group->rank(); ++r) m.at(r, c) = img.coeffs[r];
        }
        map_inf_h2_ = AbHom::make(h2_lh_.group, h2_l_.group, std::move(m));
    }
}

AbHom FiveTerm::res(const AbHom& chi) const {
    if (!(*chi.domain == *l_->additive()) || !(*chi.codomain == *a_))
        throw std::invalid_argument("res: chi must be a homomorphism L -> A");
    return compose(chi, hsub_.inclusion);
}

AbHom FiveTerm::inf_hom(const AbHom& chi) const {
    if (!(*chi.domain == *lq_.ring->additive()) || !(*chi.codomain == *a_))
        throw std::invalid_argument("inf_hom: chi must be a homomorphism L/H -> A");
    return compose(chi, lq_.projection);
}

GroupElement FiveTerm::tra(const AbHom& chi) const {
    if (!(*chi.domain == *hsub_.group) || !(*chi.codomain == *a_))
        throw std::invalid_argument("tra: chi must be a homomorphism H -> A");
    const std::size_t nq = mu_.size();
    Cocycle c{lq_.ring, a_, {}, {}};
    c.f.reserve(nq * nq);
    c.g.reserve(nq * nq);
    for (std::size_t i = 0; i < nq * nq; ++i) c.f.push_back(chi.apply(f_h_[i]));
    for (std::size_t i = 0; i < nq * nq; ++i) c.g.push_back(chi.apply(g_h_[i]));
    return h2_lh_.class_of(c);
}

Cocycle FiveTerm::pullback(const Cocycle& c) const {
    if (!(*c.l == *lq_.ring) || !(*c.a == *a_)) throw std::invalid_argument("pullback: cocycle over the wrong ring");
    const std::size_t nl = proj_idx_.size();
    const std::size_t nq = mu_.size();
    Cocycle out{l_, a_, {}, {}};
    out.f.reserve(nl * nl);
    out.g.reserve(nl * nl);
    for (std::size_t x = 0; x < nl; ++x)
        for (std::size_t y = 0; y < nl; ++y) out.f.push_back(c.f[proj_idx_[x] * nq + proj_idx_[y]]);
    for (std::size_t x = 0; x < nl; ++x)
        for (std::size_t y = 0; y < nl; ++y) out.g.push_back(c.g[proj_idx_[x] * nq + proj_idx_[y]]);
    return out;
}

GroupElement FiveTerm::inf_h2(const GroupElement& cls) const {
    if (!(*cls.parent == *h2_lh_.group)) throw std::invalid_argument("inf_h2: class not in H^2(L/H, A)");
    Cocycle rep = zero_cocycle(lq_.ring, a_);
    for (std::size_t k = 0; k < h2_lh_.group->rank(); ++k)
        if (cls.coeffs[k] != 0) rep = cocycle_add(rep, cocycle_scale(cls.coeffs[k], h2_lh_.reps[k]));
    return h2_l_.class_of(pullback(rep));
}

FiveTermReport check_five_term(LieRingPtr l, const LieIdeal& h, GroupPtr a, const CohomOptions& opts,
                               SectionRule rule) {
    FiveTerm ft(std::move(l), h, std::move(a), opts, rule);
    FiveTermReport r;
    r.hom_quotient_inv = ft.hom_quotient().group->canonical_invariants();
    r.hom_l_inv = ft.hom_l().group->canonical_invariants();
    r.hom_h_inv = ft.hom_h().group->canonical_invariants();
    r.h2_quotient_inv = ft.h2_quotient().group->canonical_invariants();
    r.h2_l_inv = ft.h2_l().group->canonical_invariants();
    r.inf_hom = ft.map_inf_hom();
    r.res = ft.map_res();
    r.tra = ft.map_tra();
    r.inf_h2 = ft.map_inf_h2();

    auto [ker_inf, im_inf] = kernel_image(r.inf_hom);
    auto [ker_res, im_res] = kernel_image(r.res);
    auto [ker_tra, im_tra] = kernel_image(r.tra);
    auto [ker_inf2, im_inf2] = kernel_image(r.inf_h2);
    r.inf_hom_injective = ker_inf.order() == 1;
    r.exact_at_hom_l = ker_res == im_inf;
    r.exact_at_hom_h = ker_tra == im_res;
    r.exact_at_h2_quotient = ker_inf2 == im_tra;
    return r;
}

namespace {

void require_lie_hom(const LieRingPtr& dom, const LieRingPtr& cod, const AbHom& h, const char* name) {
    if (!(*h.domain == *dom->additive()) || !(*h.codomain == *cod->additive()))
        throw std::invalid_argument(std::string(name) + ": domain or codomain mismatch");
    for (std::size_t i = 0; i < dom->rank(); ++i)
        for (std::size_t j = i + 1; j < dom->rank(); ++j) {
            GroupElement lhs = h.apply(dom->bracket(generator(dom->additive(), i), generator(dom->additive(), j)));
            GroupElement rhs = cod->bracket(h.apply_generator(i), h.apply_generator(j));
            if (!(lhs == rhs)) throw std::invalid_argument(std::string(name) + ": not a Lie homomorphism");
        }
}

void require_short_exact(const AbHom& alpha, const AbHom& beta) {
    auto [ker_a, im_a] = kernel_image(alpha);
    auto [ker_b, im_b] = kernel_image(beta);
    if (ker_a.order() != 1 || !im_b.is_whole_group() || !(im_a == ker_b))
        throw std::invalid_argument("check_hom_left_exact: input sequence is not exact");
}

}  // namespace

HomLeftExactReport check_hom_left_exact(const LieShortExact& seq, GroupPtr a) {
    require_lie_hom(seq.l1, seq.l2, seq.alpha, "alpha");
    require_lie_hom(seq.l2, seq.l3, seq.beta, "beta");
    require_short_exact(seq.alpha, seq.beta);

    LieHomGroup h3 = hom_lie_to_abelian(seq.l3, a);
    LieHomGroup h2g = hom_lie_to_abelian(seq.l2, a);
    LieHomGroup h1 = hom_lie_to_abelian(seq.l1, a);

    IntMat mb(h2g.group->rank(), h3.group->rank());
    for (std::size_t c = 0; c < h3.group->rank(); ++c) {
        GroupElement img = h2g.from_hom(compose(h3.to_hom(generator(h3.group, c)), seq.beta));
        for (std::size_t r = 0; r < h2g.group->rank(); ++r) mb.at(r, c) = img.coeffs[r];
    }
    AbHom beta_star = AbHom::make(h3.group, h2g.group, std::move(mb));

    IntMat ma(h1.group->rank(), h2g.group->rank());
    for (std::size_t c = 0; c < h2g.group->rank(); ++c) {
        GroupElement img = h1.from_hom(compose(h2g.to_hom(generator(h2g.group, c)), seq.alpha));
        for (std::size_t r = 0; r < h1.group->rank(); ++r) ma.at(r, c) = img.coeffs[r];
    }
    AbHom alpha_star = AbHom::make(h2g.group, h1.group, std::move(ma));

    HomLeftExactReport rep;
    auto [ker_b, im_b] = kernel_image(beta_star);
    auto [ker_a2, im_a2] = kernel_image(alpha_star);
    rep.first_injective = ker_b.order() == 1;
    rep.middle_exact = ker_a2 == im_b;
    return rep;
}

HomLeftExactReport check_hom_left_exact(const AbShortExact& seq, LieRingPtr l) {
    if (!(*seq.alpha.domain == *seq.a) || !(*seq.alpha.codomain == *seq.b) || !(*seq.beta.domain == *seq.b) ||
        !(*seq.beta.codomain == *seq.c))
        throw std::invalid_argument("check_hom_left_exact: maps do not match the groups");
    require_short_exact(seq.alpha, seq.beta);

    LieHomGroup ha = hom_lie_to_abelian(l, seq.a);
    LieHomGroup hb = hom_lie_to_abelian(l, seq.b);
    LieHomGroup hc = hom_lie_to_abelian(l, seq.c);

    IntMat ma(hb.group->rank(), ha.group->rank());
    for (std::size_t c = 0; c < ha.group->rank(); ++c) {
        GroupElement img = hb.from_hom(compose(seq.alpha, ha.to_hom(generator(ha.group, c))));
        for (std::size_t r = 0; r < hb.group->rank(); ++r) ma.at(r, c) = img.coeffs[r];
    }
    AbHom alpha_push = AbHom::make(ha.group, hb.group, std::move(ma));

    IntMat mb(hc.group->rank(), hb.group->rank());
    for (std::size_t c = 0; c < hb.group->rank(); ++c) {
        GroupElement img = hc.from_hom(compose(seq.beta, hb.to_hom(generator(hb.group, c))));
        for (std::size_t r = 0; r < hc.group->rank(); ++r) mb.at(r, c) = img.coeffs[r];
    }
    AbHom beta_push = AbHom::make(hb.group, hc.group, std::move(mb));

    HomLeftExactReport rep;
    auto [ker_a2, im_a2] = kernel_image(alpha_push);
    auto [ker_b2, im_b2] = kernel_image(beta_push);
    rep.first_injective = ker_a2.order() == 1;
    rep.middle_exact = ker_b2 == im_a2;
    return rep;
}

}  // namespace liecohom
