#include "liecohom/liering.hpp"

#include <sstream>

namespace liecohom {

namespace {

std::vector<long> moduli_ll(const FinAbGroup& g) {
    std::vector<long> v(g.rank());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = to_ll_checked(g.moduli()[i]);
    return v;
}

}  // namespace

LieRingPtr LieRing::make(std::vector<Int> moduli, const ScMap& sc_entries) {
    auto ring = std::shared_ptr<LieRing>(new LieRing());
    ring->add_ = FinAbGroup::make(std::move(moduli));
    const std::size_t n = ring->add_->rank();
    ring->sc_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) ring->sc_[i].assign(n, zero(ring->add_));

    for (const auto& [key, coeffs] : sc_entries) {
        auto [i, j] = key;
        if (i >= j || j >= n) {
            std::ostringstream os;
            os << "structure constant index (" << i << "," << j << ") out of range (need i < j < " << n << ")";
            throw LieValidationError(LieValidationError::Kind::BadIndex, os.str(), i, j);
        }
        if (coeffs.size() != n) {
            std::ostringstream os;
            os << "structure constant [" << i << "," << j << "] has " << coeffs.size() << " coefficients, expected "
               << n;
            throw LieValidationError(LieValidationError::Kind::BadVector, os.str(), i, j);
        }
        ring->sc_[i][j] = element(ring->add_, coeffs);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!ring->sc_[i][j].is_zero()) ring->pairs_.emplace_back(i, j);

    // Well-definedness: the order of each generator must kill its brackets.
    for (const auto& [i, j] : ring->pairs_) {
        const Int& di = ring->add_->moduli()[i];
        const Int& dj = ring->add_->moduli()[j];
        if (!scalar_mul(di, ring->sc_[i][j]).is_zero() || !scalar_mul(dj, ring->sc_[i][j]).is_zero()) {
            std::ostringstream os;
            os << "order incompatibility: [g" << i + 1 << ",g" << j + 1 << "] is not killed by the generator orders";
            throw LieValidationError(LieValidationError::Kind::OrderIncompatible, os.str(), i, j);
        }
    }

    // Jacobi identity on generator triples (sufficient: the Jacobiator is
    // trilinear and alternating).
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                GroupElement gi = generator(ring->add_, i);
                GroupElement gj = generator(ring->add_, j);
                GroupElement gk = generator(ring->add_, k);
                GroupElement jac = add(add(ring->bracket(gi, ring->bracket(gj, gk)),
                                           ring->bracket(gk, ring->bracket(gi, gj))),
                                       ring->bracket(gj, ring->bracket(gk, gi)));
                if (!jac.is_zero()) {
                    std::ostringstream os;
                    os << "Jacobi identity fails at generator triple (g" << i + 1 << ",g" << j + 1 << ",g" << k + 1
                       << ")";
                    throw LieValidationError(LieValidationError::Kind::Jacobi, os.str(), i, j, k);
                }
            }
    return ring;
}

GroupElement LieRing::bracket_generators(std::size_t i, std::size_t j) const {
    if (i == j) return zero(add_);
    if (i < j) return sc_[i][j];
    return neg(sc_[j][i]);
}

const GroupElement& LieRing::sc(std::size_t i, std::size_t j) const { return sc_[i][j]; }

GroupElement LieRing::bracket(const GroupElement& x, const GroupElement& y) const {
    if (!(*x.parent == *add_) || !(*y.parent == *add_))
        throw std::invalid_argument("bracket: element parent mismatch");
    std::vector<Int> acc(rank(), 0);
    for (const auto& [i, j] : pairs_) {
        Int c = x.coeffs[i] * y.coeffs[j] - x.coeffs[j] * y.coeffs[i];
        if (c == 0) continue;
        for (std::size_t k = 0; k < rank(); ++k) acc[k] += c * sc_[i][j].coeffs[k];
    }
    return element(add_, std::move(acc));
}

bool LieRing::operator==(const LieRing& other) const {
    if (!(*add_ == *other.add_)) return false;
    for (const auto& [i, j] : pairs_)
        if (!(sc_[i][j] == other.sc_[i][j])) return false;
    for (const auto& [i, j] : other.pairs_)
        if (!(sc_[i][j] == other.sc_[i][j])) return false;
    return true;
}

LieRingPtr abelian_ring(std::vector<Int> moduli) { return LieRing::make(std::move(moduli), {}); }

LieRingPtr heisenberg(const Int& p) {
    LieRing::ScMap sc;
    sc[{0, 1}] = {0, 0, 1};
    return LieRing::make({p, p, p}, sc);
}

LieRingPtr direct_sum(const LieRing& a, const LieRing& b) {
    std::vector<Int> moduli = a.additive()->moduli();
    const std::size_t na = moduli.size();
    for (const Int& m : b.additive()->moduli()) moduli.push_back(m);
    const std::size_t n = moduli.size();
    LieRing::ScMap sc;
    auto pad = [n](const std::vector<Int>& coeffs, std::size_t offset) {
        std::vector<Int> out(n, 0);
        for (std::size_t t = 0; t < coeffs.size(); ++t) out[offset + t] = coeffs[t];
        return out;
    };
    for (const auto& [i, j] : a.nonzero_pairs()) sc[{i, j}] = pad(a.sc(i, j).coeffs, 0);
    for (const auto& [i, j] : b.nonzero_pairs()) sc[{i + na, j + na}] = pad(b.sc(i, j).coeffs, na);
    return LieRing::make(std::move(moduli), sc);
}

bool is_ideal(const LieRing& l, const Subgroup& s) {
    for (std::size_t i = 0; i < l.rank(); ++i) {
        GroupElement gi = generator(l.additive(), i);
        for (const auto& g : s.generators())
            if (!s.contains(l.bracket(gi, g))) return false;
    }
    return true;
}

bool is_central_subgroup(const LieRing& l, const Subgroup& s) {
    for (std::size_t i = 0; i < l.rank(); ++i) {
        GroupElement gi = generator(l.additive(), i);
        for (const auto& g : s.generators())
            if (!l.bracket(gi, g).is_zero()) return false;
    }
    return true;
}

LieIdeal make_ideal(const LieRing& l, std::vector<GroupElement> generators) {
    Subgroup s(l.additive(), std::move(generators));
    if (!is_ideal(l, s)) throw std::invalid_argument("make_ideal: span of the generators is not an ideal");
    bool central = is_central_subgroup(l, s);
    return LieIdeal{std::move(s), true, central};
}

LieIdeal center(const LieRing& l) {
    const std::size_t n = l.rank();
    auto colmod = moduli_ll(*l.additive());
    std::vector<SparseRow> rows;
    std::vector<long> rowmod;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            SparseRow row;
            for (std::size_t i = 0; i < n; ++i) {
                long c = to_ll_checked(l.bracket_generators(i, j).coeffs[k]);
                if (c != 0) row.emplace_back(i, c);
            }
            if (!row.empty()) {
                rows.push_back(std::move(row));
                rowmod.push_back(colmod[k]);
            }
        }
    }
    auto gens = congruence_kernel(n, colmod, rows, rowmod);
    std::vector<GroupElement> elems;
    for (auto& v : gens) elems.push_back(element(l.additive(), std::move(v)));
    return LieIdeal{Subgroup(l.additive(), std::move(elems)), true, true};
}

LieIdeal derived(const LieRing& l) {
    std::vector<GroupElement> gens;
    for (const auto& [i, j] : l.nonzero_pairs()) gens.push_back(l.sc(i, j));
    Subgroup s(l.additive(), std::move(gens));
    bool central = is_central_subgroup(l, s);
    return LieIdeal{std::move(s), true, central};
}

LieQuotient quotient_lie(const LieRingPtr& l, const LieIdeal& ideal) {
    if (!ideal.ideal || !is_ideal(*l, ideal.sub))
        throw std::invalid_argument("quotient_lie: the given subgroup is not an ideal");
    QuotientResult qr = quotient(l->additive(), ideal.sub);
    const std::size_t m = qr.group->rank();
    LieRing::ScMap sc;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            GroupElement br = qr.projection.apply(l->bracket(qr.lifts[a], qr.lifts[b]));
            if (!br.is_zero()) sc[{a, b}] = br.coeffs;
        }
    LieRingPtr q = LieRing::make(qr.group->moduli(), sc);
    // Rewire the projection onto the quotient ring's own additive group.
    AbHom proj = AbHom::make(l->additive(), q->additive(), qr.projection.mat);
    std::vector<GroupElement> lifts = qr.lifts;
    return LieQuotient{std::move(q), std::move(proj), std::move(lifts)};
}

AbHom LieHomGroup::to_hom(const GroupElement& e) const { return compose(homs.to_hom(e), by_derived.projection); }

GroupElement LieHomGroup::from_hom(const AbHom& h) const {
    if (!(*h.domain == *l->additive()) || !(*h.codomain == *a))
        throw std::invalid_argument("from_hom: wrong domain or codomain");
    for (const auto& [i, j] : l->nonzero_pairs())
        if (!h.apply(l->sc(i, j)).is_zero())
            throw std::invalid_argument("from_hom: map does not kill the derived subring");
    IntMat m(a->rank(), by_derived.group->rank());
    for (std::size_t c = 0; c < by_derived.group->rank(); ++c) {
        GroupElement img = h.apply(by_derived.lifts[c]);
        for (std::size_t r = 0; r < a->rank(); ++r) m.at(r, c) = img.coeffs[r];
    }
    return homs.from_hom(AbHom::make(by_derived.group, a, std::move(m)));
}

LieHomGroup hom_lie_to_abelian(LieRingPtr l, GroupPtr a) {
    QuotientResult qr = quotient(l->additive(), derived(*l).sub);
    HomGroup hq = hom_group(qr.group, a);
    GroupPtr grp = hq.group;
    return LieHomGroup{std::move(l), std::move(a), std::move(grp), std::move(qr), std::move(hq)};
}

RingTables RingTables::build(LieRingPtr l, std::size_t guard) {
    RingTables t;
    t.l = l;
    t.elems = enumerate_elements(l->additive(), guard);
    t.size = t.elems.size();
    t.add_t.resize(t.size * t.size);
    t.brk_t.resize(t.size * t.size);
    t.neg_t.resize(t.size);
    for (std::size_t i = 0; i < t.size; ++i) {
        t.neg_t[i] = element_index(liecohom::neg(t.elems[i])).get_ui();
        for (std::size_t j = 0; j < t.size; ++j) {
            t.add_t[i * t.size + j] = element_index(liecohom::add(t.elems[i], t.elems[j])).get_ui();
            t.brk_t[i * t.size + j] = element_index(l->bracket(t.elems[i], t.elems[j])).get_ui();
        }
    }
    return t;
}

std::size_t RingTables::index(const GroupElement& x) const { return element_index(x).get_ui(); }

}  // namespace liecohom
