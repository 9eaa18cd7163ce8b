#pragma once

#include "liecohom/cohomology.hpp"

namespace liecohom {

enum class SectionRule { EnumerationLeast, EnumerationGreatest };

/// The maps Res, Inf (on Hom and on H^2) and Tra attached to a central ideal
/// H of L, with the machinery to evaluate them on single homomorphisms or
/// classes and as group-level homomorphisms.
class FiveTerm {
public:
    FiveTerm(LieRingPtr l, LieIdeal h, GroupPtr a, const CohomOptions& opts = {},
             SectionRule rule = SectionRule::EnumerationLeast);

    const LieRingPtr& l() const { return l_; }
    const GroupPtr& a() const { return a_; }
    const LieRingPtr& quotient_ring() const { return lq_.ring; }
    const SubgroupPresentation& h_presentation() const { return hsub_; }
    const LieHomGroup& hom_quotient() const { return hom_lh_; }
    const LieHomGroup& hom_l() const { return hom_l_; }
    const HomGroup& hom_h() const { return hom_h_; }
    const H2Group& h2_quotient() const { return h2_lh_; }
    const H2Group& h2_l() const { return h2_l_; }

    /// Restriction of a homomorphism L -> A to H (as the abstract group).
    AbHom res(const AbHom& chi) const;
    /// chi composed with the natural projection L -> L/H.
    AbHom inf_hom(const AbHom& chi) const;
    /// Class of (chi . f, chi . g) in H^2(L/H, A) for chi : H -> A.
    GroupElement tra(const AbHom& chi) const;
    /// Pull a cocycle over L/H back through the projection.
    Cocycle pullback(const Cocycle& c) const;
    /// Inflation on classes.
    GroupElement inf_h2(const GroupElement& cls) const;

    const AbHom& map_inf_hom() const { return map_inf_hom_; }
    const AbHom& map_res() const { return map_res_; }
    const AbHom& map_tra() const { return map_tra_; }
    const AbHom& map_inf_h2() const { return map_inf_h2_; }

private:
    LieRingPtr l_;
    LieIdeal h_;
    GroupPtr a_;
    SubgroupPresentation hsub_;
    LieQuotient lq_;
    LieHomGroup hom_lh_;
    LieHomGroup hom_l_;
    HomGroup hom_h_;
    H2Group h2_lh_;
    H2Group h2_l_;
    std::vector<std::size_t> proj_idx_;         // L element index -> L/H element index
    std::vector<GroupElement> mu_;              // section of the projection
    std::vector<GroupElement> f_h_, g_h_;       // H-valued cocycle tables of 0->H->L->L/H->0
    AbHom map_inf_hom_, map_res_, map_tra_, map_inf_h2_;
};

/// Machine check of the five-term sequence
///   0 -> Hom(L/H,A) -> Hom(L,A) -> Hom(H,A) -> H^2(L/H,A) -> H^2(L,A).
struct FiveTermReport {
    std::vector<Int> hom_quotient_inv, hom_l_inv, hom_h_inv, h2_quotient_inv, h2_l_inv;
    AbHom inf_hom, res, tra, inf_h2;
    bool inf_hom_injective = false;
    bool exact_at_hom_l = false;
    bool exact_at_hom_h = false;
    bool exact_at_h2_quotient = false;
    bool all_exact() const { return inf_hom_injective && exact_at_hom_l && exact_at_hom_h && exact_at_h2_quotient; }
};

FiveTermReport check_five_term(LieRingPtr l, const LieIdeal& h, GroupPtr a, const CohomOptions& opts = {},
                               SectionRule rule = SectionRule::EnumerationLeast);

struct LieShortExact {
    LieRingPtr l1, l2, l3;
    AbHom alpha;  // L1.additive -> L2.additive, a Lie homomorphism
    AbHom beta;   // L2.additive -> L3.additive
};

struct AbShortExact {
    GroupPtr a, b, c;
    AbHom alpha;
    AbHom beta;
};

struct HomLeftExactReport {
    bool first_injective = false;
    bool middle_exact = false;
    bool ok() const { return first_injective && middle_exact; }
};

/// 0 -> Hom(L3,A) -> Hom(L2,A) -> Hom(L1,A) for a short exact sequence of
/// Lie rings; throws if the input sequence is not exact as given.
HomLeftExactReport check_hom_left_exact(const LieShortExact& seq, GroupPtr a);
/// 0 -> Hom(L,A) -> Hom(L,B) -> Hom(L,C) for a short exact sequence of
/// abelian coefficient groups.
HomLeftExactReport check_hom_left_exact(const AbShortExact& seq, LieRingPtr l);

}  // namespace liecohom
