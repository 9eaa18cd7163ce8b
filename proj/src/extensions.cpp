#include "liecohom/extensions.hpp"

#include <sstream>
#include <stdexcept>

namespace liecohom {

namespace {

std::vector<long> moduli_ll(const FinAbGroup& g) {
    std::vector<long> v(g.rank());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = to_ll_checked(g.moduli()[i]);
    return v;
}

// Element model of the twisted product A x L: addition
// (a,x) + (b,y) = (a + b + g(x,y), x + y) evaluated through the tables.
struct PairModel {
    const Cocycle& c;
    const RingTables& t;

    struct Pair {
        GroupElement aval;
        std::size_t x;
    };

    Pair zero() const { return {liecohom::zero(c.a), 0}; }

    Pair add(const Pair& p, const Pair& q) const {
        return {liecohom::add(liecohom::add(p.aval, q.aval), c.g_at(p.x, q.x)), t.add(p.x, q.x)};
    }

    Pair bracket(const Pair& p, const Pair& q) const { return {c.f_at(p.x, q.x), t.brk(p.x, q.x)}; }
};

// Presentation of B on the images of the A generators followed by the
// section lifts of the L generators.
struct BPresentation {
    LieRingPtr l;
    GroupPtr a;
    std::shared_ptr<RingTables> lt;
    Cocycle c;
    std::size_t ra, rl, n;
    std::vector<std::size_t> lgen_idx;   // element index of each L generator
    std::vector<long> period;      // additive order of each lift (0, e_l)
    GroupPtr badd;
    std::vector<std::size_t> kept;
    IntMat u, uinv;

    PairModel model() const { return PairModel{c, *lt}; }

    // Value of z_A-part plus sum over L slots of z[ra+l] copies of (0, e_l).
    PairModel::Pair eval(const std::vector<Int>& z) const {
        PairModel m = model();
        std::vector<Int> acoeff(ra);
        for (std::size_t k = 0; k < ra; ++k) acoeff[k] = z[k];
        PairModel::Pair acc{element(a, std::move(acoeff)), 0};
        for (std::size_t li = 0; li < rl; ++li) {
            Int mm;
            mpz_fdiv_r(mm.get_mpz_t(), z[ra + li].get_mpz_t(), Int(period[li]).get_mpz_t());
            long reps = mm.get_si();
            PairModel::Pair lift{liecohom::zero(a), lgen_idx[li]};
            for (long s = 0; s < reps; ++s) acc = m.add(acc, lift);
        }
        return acc;
    }

    // Slot coordinates of a model pair.
    std::vector<Int> pair_to_slots(const PairModel::Pair& p) const {
        const GroupElement& x = lt->elems[p.x];
        std::vector<Int> z(n, 0);
        for (std::size_t li = 0; li < rl; ++li) z[ra + li] = x.coeffs[li];
        PairModel::Pair corr = eval(z);
        GroupElement adiff = sub(p.aval, corr.aval);
        for (std::size_t k = 0; k < ra; ++k) z[k] = adiff.coeffs[k];
        return z;
    }

    GroupElement to_b(const std::vector<Int>& z) const {
        std::vector<Int> out(badd->rank(), 0);
        for (std::size_t r = 0; r < kept.size(); ++r)
            for (std::size_t cidx = 0; cidx < n; ++cidx)
                if (z[cidx] != 0) out[r] += u.at(kept[r], cidx) * z[cidx];
        return element(badd, std::move(out));
    }

    std::vector<Int> from_b(std::size_t gen) const {
        std::vector<Int> z(n);
        for (std::size_t i = 0; i < n; ++i) z[i] = uinv.at(i, kept[gen]);
        return z;
    }
};

BPresentation build_presentation(LieRingPtr l, GroupPtr a, const Cocycle& c, std::size_t guard) {
    BPresentation p;
    p.l = std::move(l);
    p.a = std::move(a);
    p.lt = std::make_shared<RingTables>(RingTables::build(p.l, guard));
    p.c = c;
    p.ra = p.a->rank();
    p.rl = p.l->rank();
    p.n = p.ra + p.rl;
    PairModel m{p.c, *p.lt};

    p.lgen_idx.resize(p.rl);
    for (std::size_t li = 0; li < p.rl; ++li)
        p.lgen_idx[li] = element_index(generator(p.l->additive(), li)).get_ui();

    // d_l * (0, e_l) = (s_l, 0); the lift has additive order d_l * ord(s_l).
    std::vector<GroupElement> s_of_gen(p.rl, zero(p.a));
    p.period.resize(p.rl);
    for (std::size_t li = 0; li < p.rl; ++li) {
        long d = to_ll_checked(p.l->additive()->moduli()[li]);
        PairModel::Pair acc = m.zero();
        PairModel::Pair lift{zero(p.a), p.lgen_idx[li]};
        for (long s = 0; s < d; ++s) acc = m.add(acc, lift);
        if (acc.x != 0) throw std::logic_error("extension presentation: lift order mismatch");
        s_of_gen[li] = acc.aval;
        p.period[li] = d * to_ll_checked(element_order(acc.aval));
    }

    // Relation lattice of the presentation Z^n -> B.
    IntMat rel(p.n, p.n);
    for (std::size_t k = 0; k < p.ra; ++k) rel.at(k, k) = p.a->moduli()[k];
    for (std::size_t li = 0; li < p.rl; ++li) {
        for (std::size_t k = 0; k < p.ra; ++k) rel.at(p.ra + li, k) = -s_of_gen[li].coeffs[k];
        rel.at(p.ra + li, p.ra + li) = p.l->additive()->moduli()[li];
    }
    SnfOptions opts;
    opts.want_u = true;
    opts.want_uinv = true;
    opts.want_v = false;
    SnfResult res = snf(rel.transposed(), opts);
    std::vector<Int> mods;
    for (std::size_t i = 0; i < p.n; ++i)
        if (res.s.at(i, i) != 1) {
            p.kept.push_back(i);
            mods.push_back(res.s.at(i, i));
        }
    p.badd = FinAbGroup::make(std::move(mods));
    p.u = std::move(res.u);
    p.uinv = std::move(res.uinv);
    return p;
}

}  // namespace

CentralExtension extension_from_cocycle(LieRingPtr l, GroupPtr a, const Cocycle& c, std::size_t guard) {
    CocycleCheck check = is_cocycle(c, guard);
    if (!check.ok) throw std::invalid_argument("extension_from_cocycle: not a cocycle: " + check.message);
    if (!(*c.l == *l) || !(*c.a == *a)) throw std::invalid_argument("extension_from_cocycle: mismatched cocycle");

    BPresentation p = build_presentation(l, a, c, guard);
    PairModel m = p.model();
    const std::size_t rb = p.badd->rank();

    // Structure constants between the presented generators, via the model.
    std::vector<std::vector<Int>> lifts(rb);
    for (std::size_t i = 0; i < rb; ++i) lifts[i] = p.from_b(i);
    LieRing::ScMap sc;
    for (std::size_t i = 0; i < rb; ++i)
        for (std::size_t j = i + 1; j < rb; ++j) {
            GroupElement acc = zero(p.badd);
            for (std::size_t li = 0; li < p.rl; ++li)
                for (std::size_t lj = 0; lj < p.rl; ++lj) {
                    if (li == lj) continue;
                    Int coef = lifts[i][p.ra + li] * lifts[j][p.ra + lj];
                    if (coef == 0) continue;
                    PairModel::Pair br = m.bracket({zero(p.a), p.lgen_idx[li]}, {zero(p.a), p.lgen_idx[lj]});
                    acc = add(acc, scalar_mul(coef, p.to_b(p.pair_to_slots(br))));
                }
            if (!acc.is_zero()) sc[{i, j}] = acc.coeffs;
        }
    LieRingPtr b = LieRing::make(p.badd->moduli(), sc);

    IntMat iota_mat(rb, p.ra);
    for (std::size_t k = 0; k < p.ra; ++k) {
        std::vector<Int> slot(p.n, 0);
        slot[k] = 1;
        GroupElement img = p.to_b(slot);
        for (std::size_t r = 0; r < rb; ++r) iota_mat.at(r, k) = img.coeffs[r];
    }
    AbHom iota = AbHom::make(a, b->additive(), std::move(iota_mat));

    IntMat beta_mat(p.rl, rb);
    for (std::size_t i = 0; i < rb; ++i)
        for (std::size_t li = 0; li < p.rl; ++li) beta_mat.at(li, i) = lifts[i][p.ra + li];
    AbHom beta = AbHom::make(b->additive(), l->additive(), std::move(beta_mat));

    CentralExtension e{std::move(a), std::move(b), std::move(l), std::move(iota), std::move(beta)};
    validate_extension(e, guard);
    return e;
}

void validate_extension(const CentralExtension& e, std::size_t guard) {
    if (e.b->order() != e.a->order() * e.l->order())
        throw std::invalid_argument("extension: |B| != |A| * |L|");
    if (!(*e.iota.domain == *e.a) || !(*e.iota.codomain == *e.b->additive()) ||
        !(*e.beta.domain == *e.b->additive()) || !(*e.beta.codomain == *e.l->additive()))
        throw std::invalid_argument("extension: structure map domains do not line up");
    auto [ker_iota, im_iota] = kernel_image(e.iota);
    if (ker_iota.order() != 1) throw std::invalid_argument("extension: iota is not injective");
    auto [ker_beta, im_beta] = kernel_image(e.beta);
    if (!im_beta.is_whole_group()) throw std::invalid_argument("extension: beta is not surjective");
    if (!(ker_beta == im_iota)) throw std::invalid_argument("extension: im(iota) != ker(beta)");
    for (std::size_t i = 0; i < e.b->rank(); ++i) {
        GroupElement gi = generator(e.b->additive(), i);
        for (std::size_t k = 0; k < e.a->rank(); ++k)
            if (!e.b->bracket(gi, e.iota.apply_generator(k)).is_zero())
                throw std::invalid_argument("extension: image of iota is not central");
        for (std::size_t j = i + 1; j < e.b->rank(); ++j) {
            GroupElement gj = generator(e.b->additive(), j);
            GroupElement lhs = e.beta.apply(e.b->bracket(gi, gj));
            GroupElement rhs = e.l->bracket(e.beta.apply(gi), e.beta.apply(gj));
            if (!(lhs == rhs)) throw std::invalid_argument("extension: beta is not a Lie homomorphism");
        }
    }
    (void)guard;
}

Section section_of(const CentralExtension& e, std::size_t guard) {
    auto lelems = enumerate_elements(e.l->additive(), guard);
    auto belems = enumerate_elements(e.b->additive(), guard);
    std::vector<GroupElement> lambda;
    lambda.reserve(lelems.size());
    for (const auto& x : lelems) {
        const GroupElement* found = nullptr;
        for (const auto& b : belems) {
            if (e.beta.apply(b) == x) {
                found = &b;
                break;
            }
        }
        if (!found) throw std::logic_error("section_of: beta misses an element (extension invariant broken)");
        lambda.push_back(*found);
    }
    return Section{std::move(lambda)};
}

Cocycle cocycle_from_extension(const CentralExtension& e, const Section& s, std::size_t guard) {
    RingTables lt = RingTables::build(e.l, guard);
    const std::size_t n = lt.size;
    if (s.lambda.size() != n) throw std::invalid_argument("cocycle_from_extension: section size mismatch");
    for (std::size_t x = 0; x < n; ++x)
        if (!(e.beta.apply(s.lambda[x]) == lt.elems[x]))
            throw std::invalid_argument("cocycle_from_extension: not a section of beta");
    if (!s.lambda[0].is_zero()) throw std::invalid_argument("cocycle_from_extension: section must send 0 to 0");

    auto bmod = moduli_ll(*e.b->additive());
    auto amod = moduli_ll(*e.a);
    std::vector<SparseRow> rows(e.b->rank());
    for (std::size_t r = 0; r < e.b->rank(); ++r)
        for (std::size_t k = 0; k < e.a->rank(); ++k) {
            long c = to_ll_checked(e.iota.mat.at(r, k));
            if (c != 0) rows[r].emplace_back(k, c);
        }
    auto pull_back = [&](const GroupElement& v) {
        std::vector<long> rhs(e.b->rank());
        for (std::size_t r = 0; r < e.b->rank(); ++r) rhs[r] = to_ll_checked(v.coeffs[r]);
        auto sol = congruence_solve(e.a->rank(), amod, rows, bmod, rhs);
        if (!sol) throw std::logic_error("cocycle_from_extension: value outside im(iota) (extension invariant broken)");
        return element(e.a, std::move(*sol));
    };

    Cocycle c{e.l, e.a, {}, {}};
    c.f.reserve(n * n);
    c.g.reserve(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            c.f.push_back(pull_back(sub(e.b->bracket(s.lambda[x], s.lambda[y]), s.lambda[lt.brk(x, y)])));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            c.g.push_back(pull_back(sub(add(s.lambda[x], s.lambda[y]), s.lambda[lt.add(x, y)])));
    return c;
}

Cocycle cocycle_of(const CentralExtension& e, std::size_t guard) {
    return cocycle_from_extension(e, section_of(e, guard), guard);
}

bool are_equivalent(const CentralExtension& e1, const CentralExtension& e2, const H2Group& h) {
    if (!(*e1.a == *e2.a) || !(*e1.l == *e2.l))
        throw std::invalid_argument("are_equivalent: extensions over different A or L");
    Cocycle c1 = cocycle_of(e1);
    Cocycle c2 = cocycle_of(e2);
    return h.class_of(cocycle_sub(c1, c2)).is_zero();
}

bool are_equivalent(const CentralExtension& e1, const CentralExtension& e2) {
    if (!(*e1.a == *e2.a) || !(*e1.l == *e2.l))
        throw std::invalid_argument("are_equivalent: extensions over different A or L");
    return are_equivalent(e1, e2, h2(e1.l, e1.a));
}

bool brute_equivalent(const CentralExtension& e1, const CentralExtension& e2, const BruteOptions& opts) {
    if (!(*e1.a == *e2.a) || !(*e1.l == *e2.l))
        throw std::invalid_argument("brute_equivalent: extensions over different A or L");
    if (e1.b->order() > static_cast<unsigned long>(opts.max_order))
        throw std::length_error("brute_equivalent: |B| exceeds the search bound");

    const std::size_t rb = e1.b->rank();
    auto belems2 = enumerate_elements(e2.b->additive(), opts.max_order);

    // Candidate images per generator: right coset of iota'(A) over beta.
    std::vector<std::vector<GroupElement>> candidates(rb);
    for (std::size_t i = 0; i < rb; ++i) {
        GroupElement gi = generator(e1.b->additive(), i);
        GroupElement target = e1.beta.apply(gi);
        const Int& di = e1.b->additive()->moduli()[i];
        for (const auto& b2 : belems2) {
            if (!(e2.beta.apply(b2) == target)) continue;
            if (!scalar_mul(di, b2).is_zero()) continue;  // must extend to a hom
            candidates[i].push_back(b2);
        }
        if (candidates[i].empty()) return false;
    }

    std::vector<std::size_t> pick(rb, 0);
    for (;;) {
        IntMat mat(e2.b->rank(), rb);
        for (std::size_t i = 0; i < rb; ++i)
            for (std::size_t r = 0; r < e2.b->rank(); ++r) mat.at(r, i) = candidates[i][pick[i]].coeffs[r];
        AbHom gamma = AbHom::make(e1.b->additive(), e2.b->additive(), std::move(mat));

        bool ok = true;
        for (std::size_t k = 0; ok && k < e1.a->rank(); ++k)
            if (!(gamma.apply(e1.iota.apply_generator(k)) == e2.iota.apply_generator(k))) ok = false;
        for (std::size_t i = 0; ok && i < rb; ++i)
            for (std::size_t j = i + 1; ok && j < rb; ++j) {
                GroupElement gi = generator(e1.b->additive(), i), gj = generator(e1.b->additive(), j);
                GroupElement lhs = gamma.apply(e1.b->bracket(gi, gj));
                GroupElement rhs = e2.b->bracket(gamma.apply(gi), gamma.apply(gj));
                if (!(lhs == rhs)) ok = false;
            }
        if (ok) {
            // The Five Lemma predicts bijectivity; verify it outright.
            auto [ker, im] = kernel_image(gamma);
            if (ker.order() == 1 && im.is_whole_group()) return true;
            throw std::logic_error("brute_equivalent: commuting homomorphism is not bijective");
        }
        std::size_t pos = 0;
        while (pos < rb && ++pick[pos] == candidates[pos].size()) {
            pick[pos] = 0;
            ++pos;
        }
        if (pos == rb) return false;
    }
}

SplitResult is_split(const CentralExtension& e, const H2Group& h) {
    Section sec = section_of(e);
    Cocycle c = cocycle_from_extension(e, sec);
    if (!h.class_of(c).is_zero()) return {false, std::nullopt};

    // Recover t with coboundary(t) = c and correct the section by it.
    const RingTables& lt = *h.ts.tables;
    const std::size_t n = lt.size;
    const std::size_t ra = e.a->rank();
    if (n == 1 || ra == 0) return {true, Section{sec}};
    auto amod = moduli_ll(*e.a);
    std::vector<long> colmod, rowmod;
    for (std::size_t li = 1; li < n; ++li)
        for (std::size_t k = 0; k < ra; ++k) colmod.push_back(amod[k]);
    std::vector<SparseRow> rows;
    std::vector<long> rhs;
    auto unknown = [&](std::size_t li, std::size_t k) { return (li - 1) * ra + k; };
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            std::size_t bxy = lt.brk(x, y), axy = lt.add(x, y);
            for (std::size_t k = 0; k < ra; ++k) {
                SparseRow fr;
                if (bxy != 0) fr.emplace_back(unknown(bxy, k), -1);
                rows.push_back(std::move(fr));
                rowmod.push_back(amod[k]);
                rhs.push_back(to_ll_checked(c.f_at(x, y).coeffs[k]));
                SparseRow gr;
                if (x != 0) gr.emplace_back(unknown(x, k), 1);
                if (y != 0) gr.emplace_back(unknown(y, k), 1);
                if (axy != 0) gr.emplace_back(unknown(axy, k), -1);
                rows.push_back(std::move(gr));
                rowmod.push_back(amod[k]);
                rhs.push_back(to_ll_checked(c.g_at(x, y).coeffs[k]));
            }
        }
    auto sol = congruence_solve(colmod.size(), colmod, rows, rowmod, rhs);
    if (!sol) throw std::logic_error("is_split: zero class without a coboundary witness");
    Section hom_sec = sec;
    for (std::size_t li = 1; li < n; ++li) {
        std::vector<Int> tc(ra);
        for (std::size_t k = 0; k < ra; ++k) tc[k] = (*sol)[unknown(li, k)];
        hom_sec.lambda[li] = sub(sec.lambda[li], e.iota.apply(element(e.a, std::move(tc))));
    }
    return {true, std::move(hom_sec)};
}

SplitResult is_split(const CentralExtension& e) { return is_split(e, h2(e.l, e.a)); }

std::vector<ExtensionClass> classify_extensions(LieRingPtr l, GroupPtr a, const ClassifyOptions& opts) {
    H2Group h = h2(l, a, opts.cohom);
    if (h.group->order() > static_cast<unsigned long>(opts.budget)) {
        std::ostringstream os;
        os << "classify_extensions: |H2| = " << h.group->order() << " exceeds the enumeration budget " << opts.budget;
        throw std::length_error(os.str());
    }
    std::vector<ExtensionClass> out;
    for (const auto& elt : enumerate_elements(h.group, opts.budget)) {
        Cocycle c = zero_cocycle(l, a);
        for (std::size_t k = 0; k < h.group->rank(); ++k)
            if (elt.coeffs[k] != 0) c = cocycle_add(c, cocycle_scale(elt.coeffs[k], h.reps[k]));
        CentralExtension e = extension_from_cocycle(l, a, c);
        std::vector<Int> inv = e.b->additive()->canonical_invariants();
        out.push_back(ExtensionClass{elt, std::move(e), std::move(inv), elt.is_zero()});
    }
    return out;
}

}  // namespace liecohom
