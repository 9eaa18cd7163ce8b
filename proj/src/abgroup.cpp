#include "liecohom/abgroup.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace liecohom {

namespace {

Int mod_reduce(const Int& x, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

void require_same_parent(const GroupElement& a, const GroupElement& b, const char* what) {
    if (!a.parent || !b.parent || !(*a.parent == *b.parent)) {
        throw std::invalid_argument(std::string(what) + ": parent mismatch");
    }
}

std::vector<long> coeffs_ll(const GroupElement& x) {
    std::vector<long> v(x.coeffs.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = to_ll_checked(x.coeffs[i]);
    return v;
}

std::vector<long> moduli_ll(const FinAbGroup& g) {
    std::vector<long> v(g.rank());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = to_ll_checked(g.moduli()[i]);
    return v;
}

}  // namespace

GroupPtr FinAbGroup::make(std::vector<Int> moduli) {
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        if (moduli[i] < 1) {
            std::ostringstream os;
            os << "FinAbGroup: modulus at index " << i << " must be >= 1, got " << moduli[i];
            throw std::invalid_argument(os.str());
        }
    }
    return GroupPtr(new FinAbGroup(std::move(moduli)));
}

Int FinAbGroup::order() const {
    Int n = 1;
    for (const Int& m : moduli_) n *= m;
    return n;
}

Int FinAbGroup::exponent() const {
    Int e = 1;
    for (const Int& m : moduli_) e = lcm(e, m);
    return e;
}

std::vector<Int> FinAbGroup::canonical_invariants() const {
    if (moduli_.empty()) return {};
    IntMat d(moduli_.size(), moduli_.size());
    for (std::size_t i = 0; i < moduli_.size(); ++i) d.at(i, i) = moduli_[i];
    SnfOptions opts;
    opts.want_u = opts.want_v = false;
    auto diag = snf(d, opts).diagonal();
    std::vector<Int> out;
    for (const Int& x : diag)
        if (x != 1) out.push_back(x);
    return out;
}

GroupPtr trivial_group() { return FinAbGroup::make({}); }

bool GroupElement::is_zero() const {
    for (const Int& c : coeffs)
        if (c != 0) return false;
    return true;
}

bool GroupElement::operator==(const GroupElement& other) const {
    return parent && other.parent && *parent == *other.parent && coeffs == other.coeffs;
}

GroupElement element(GroupPtr g, std::vector<Int> coeffs) {
    if (coeffs.size() != g->rank()) throw std::invalid_argument("element: coefficient count mismatch");
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = mod_reduce(coeffs[i], g->moduli()[i]);
    return GroupElement{std::move(g), std::move(coeffs)};
}

GroupElement zero(GroupPtr g) {
    std::vector<Int> c(g->rank(), 0);
    return GroupElement{std::move(g), std::move(c)};
}

GroupElement generator(GroupPtr g, std::size_t i) {
    if (i >= g->rank()) throw std::invalid_argument("generator: index out of range");
    std::vector<Int> c(g->rank(), 0);
    c[i] = 1;
    return element(std::move(g), std::move(c));
}

GroupElement add(const GroupElement& a, const GroupElement& b) {
    require_same_parent(a, b, "add");
    std::vector<Int> c(a.coeffs.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_reduce(a.coeffs[i] + b.coeffs[i], a.parent->moduli()[i]);
    return GroupElement{a.parent, std::move(c)};
}

GroupElement neg(const GroupElement& a) {
    std::vector<Int> c(a.coeffs.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_reduce(-a.coeffs[i], a.parent->moduli()[i]);
    return GroupElement{a.parent, std::move(c)};
}

GroupElement sub(const GroupElement& a, const GroupElement& b) { return add(a, neg(b)); }

GroupElement scalar_mul(const Int& k, const GroupElement& a) {
    std::vector<Int> c(a.coeffs.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_reduce(k * a.coeffs[i], a.parent->moduli()[i]);
    return GroupElement{a.parent, std::move(c)};
}

Int element_order(const GroupElement& a) {
    Int ord = 1;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        Int d = a.parent->moduli()[i];
        ord = lcm(ord, d / gcd(d, a.coeffs[i]));
    }
    return ord;
}

Int element_index(const GroupElement& a) {
    Int idx = 0;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) idx = idx * a.parent->moduli()[i] + a.coeffs[i];
    return idx;
}

GroupElement element_at(GroupPtr g, const Int& index) {
    if (index < 0 || index >= g->order()) throw std::out_of_range("element_at: index out of range");
    std::vector<Int> c(g->rank());
    Int rest = index;
    for (std::size_t i = g->rank(); i-- > 0;) {
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rest.get_mpz_t(), g->moduli()[i].get_mpz_t());
        c[i] = r;
        rest = q;
    }
    return GroupElement{std::move(g), std::move(c)};
}

std::vector<GroupElement> enumerate_elements(GroupPtr g, std::size_t guard) {
    if (g->order() > static_cast<unsigned long>(guard))
        throw std::length_error("enumerate_elements: group too large to enumerate");
    std::size_t n = g->order().get_ui();
    std::vector<GroupElement> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(element_at(g, Int(static_cast<long>(i))));
    return out;
}

AbHom AbHom::make(GroupPtr domain, GroupPtr codomain, IntMat mat) {
    if (mat.rows() != codomain->rank() || mat.cols() != domain->rank())
        throw std::invalid_argument("AbHom: matrix shape mismatch");
    for (std::size_t r = 0; r < mat.rows(); ++r)
        for (std::size_t c = 0; c < mat.cols(); ++c) mat.at(r, c) = mod_reduce(mat.at(r, c), codomain->moduli()[r]);
    for (std::size_t j = 0; j < domain->rank(); ++j) {
        const Int& d = domain->moduli()[j];
        for (std::size_t k = 0; k < codomain->rank(); ++k) {
            if (mod_reduce(d * mat.at(k, j), codomain->moduli()[k]) != 0)
                throw std::invalid_argument("AbHom: map not well defined on generator " + std::to_string(j));
        }
    }
    return AbHom{std::move(domain), std::move(codomain), std::move(mat)};
}

AbHom AbHom::identity(GroupPtr g) {
    IntMat m = IntMat::identity(g->rank());
    return AbHom::make(g, g, std::move(m));
}

AbHom AbHom::zero(GroupPtr domain, GroupPtr codomain) {
    IntMat m(codomain->rank(), domain->rank());
    return AbHom{std::move(domain), std::move(codomain), std::move(m)};
}

GroupElement AbHom::apply(const GroupElement& x) const {
    if (!(*x.parent == *domain)) throw std::invalid_argument("AbHom apply: element not in domain");
    std::vector<Int> out(codomain->rank(), 0);
    for (std::size_t j = 0; j < domain->rank(); ++j) {
        if (x.coeffs[j] == 0) continue;
        for (std::size_t k = 0; k < codomain->rank(); ++k) out[k] += x.coeffs[j] * mat.at(k, j);
    }
    return element(codomain, std::move(out));
}

GroupElement AbHom::apply_generator(std::size_t j) const {
    std::vector<Int> out(codomain->rank());
    for (std::size_t k = 0; k < codomain->rank(); ++k) out[k] = mat.at(k, j);
    return element(codomain, std::move(out));
}

bool AbHom::is_zero() const { return mat.is_zero(); }

bool AbHom::operator==(const AbHom& other) const {
    return *domain == *other.domain && *codomain == *other.codomain && mat == other.mat;
}

AbHom compose(const AbHom& outer, const AbHom& inner) {
    if (!(*outer.domain == *inner.codomain)) throw std::invalid_argument("compose: domain/codomain mismatch");
    return AbHom::make(inner.domain, outer.codomain, outer.mat * inner.mat);
}

AbHom hom_add(const AbHom& a, const AbHom& b) {
    if (!(*a.domain == *b.domain) || !(*a.codomain == *b.codomain))
        throw std::invalid_argument("hom_add: shape mismatch");
    IntMat m = a.mat;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) += b.mat.at(r, c);
    return AbHom::make(a.domain, a.codomain, std::move(m));
}

AbHom hom_neg(const AbHom& a) {
    IntMat m = a.mat;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = -m.at(r, c);
    return AbHom::make(a.domain, a.codomain, std::move(m));
}

Subgroup::Subgroup(GroupPtr parent, std::vector<GroupElement> generators)
    : parent_(std::move(parent)), gens_(std::move(generators)), cache_(std::make_shared<Cache>()) {
    for (const auto& g : gens_)
        if (!(*g.parent == *parent_)) throw std::invalid_argument("Subgroup: generator not in parent group");
}

const TriangularBasis& Subgroup::lattice() const {
    std::call_once(cache_->once, [this] {
        auto basis = std::make_unique<TriangularBasis>(moduli_ll(*parent_));
        for (const auto& g : gens_) basis->insert(coeffs_ll(g));
        basis->canonicalize();
        cache_->basis = std::move(basis);
    });
    return *cache_->basis;
}

Int Subgroup::order() const { return parent_->order() / lattice().determinant(); }

bool Subgroup::contains(const GroupElement& x) const {
    if (!(*x.parent == *parent_)) throw std::invalid_argument("Subgroup contains: parent mismatch");
    return lattice().contains(coeffs_ll(x));
}

bool Subgroup::contains(const Subgroup& other) const {
    if (!(*other.parent_ == *parent_)) throw std::invalid_argument("Subgroup contains: parent mismatch");
    for (const auto& g : other.gens_)
        if (!contains(g)) return false;
    return true;
}

bool Subgroup::operator==(const Subgroup& other) const {
    if (!(*other.parent_ == *parent_)) throw std::invalid_argument("Subgroup equality: parent mismatch");
    return lattice() == other.lattice();
}

bool Subgroup::is_whole_group() const { return lattice().determinant() == 1; }

bool Subgroup::is_trivial() const { return order() == 1; }

Subgroup trivial_subgroup(GroupPtr g) { return Subgroup(std::move(g), {}); }

Subgroup whole_subgroup(GroupPtr g) {
    std::vector<GroupElement> gens;
    for (std::size_t i = 0; i < g->rank(); ++i) gens.push_back(generator(g, i));
    return Subgroup(std::move(g), std::move(gens));
}

std::vector<Subgroup> enumerate_subgroups(GroupPtr g, std::size_t guard) {
    auto elems = enumerate_elements(g, guard);
    std::map<std::vector<std::vector<long>>, std::vector<GroupElement>> seen;
    auto key_of = [&](const std::vector<GroupElement>& gens) {
        TriangularBasis b(moduli_ll(*g));
        for (const auto& e : gens) b.insert(coeffs_ll(e));
        b.canonicalize();
        std::vector<std::vector<long>> key;
        for (std::size_t i = 0; i < b.dim(); ++i) key.push_back(b.row(i));
        return key;
    };
    std::vector<std::vector<GroupElement>> frontier{{}};
    seen.emplace(key_of({}), std::vector<GroupElement>{});
    while (!frontier.empty()) {
        std::vector<std::vector<GroupElement>> next;
        for (const auto& gens : frontier) {
            Subgroup s(g, gens);
            for (const auto& e : elems) {
                if (e.is_zero() || s.contains(e)) continue;
                auto extended = gens;
                extended.push_back(e);
                auto key = key_of(extended);
                if (seen.emplace(std::move(key), extended).second) next.push_back(std::move(extended));
            }
        }
        frontier = std::move(next);
    }
    std::vector<Subgroup> out;
    out.reserve(seen.size());
    for (const auto& [key, gens] : seen) out.emplace_back(g, gens);
    return out;
}

Subgroup solve_congruences(const IntMat& rows, GroupPtr space) {
    if (rows.rows() > 0 && rows.cols() != space->rank())
        throw std::invalid_argument("solve_congruences: row length does not match unknown count");
    auto colmod = moduli_ll(*space);
    std::vector<SparseRow> sys;
    std::vector<long> rowmod;
    for (std::size_t i = 0; i < rows.rows(); ++i) {
        long m = 1;
        for (std::size_t j = 0; j < rows.cols(); ++j)
            if (rows.at(i, j) != 0) m = to_ll_checked(lcm(Int(m), Int(colmod[j])));
        SparseRow sr;
        for (std::size_t j = 0; j < rows.cols(); ++j) {
            long c = to_ll_checked(mod_reduce(rows.at(i, j), Int(m)));
            if (c != 0) sr.emplace_back(j, c);
        }
        sys.push_back(std::move(sr));
        rowmod.push_back(m);
    }
    auto gens = congruence_kernel(space->rank(), colmod, sys, rowmod);
    std::vector<GroupElement> out;
    for (auto& v : gens) out.push_back(element(space, std::move(v)));
    return Subgroup(std::move(space), std::move(out));
}

std::pair<Subgroup, Subgroup> kernel_image(const AbHom& h) {
    auto colmod = moduli_ll(*h.domain);
    auto rowmod = moduli_ll(*h.codomain);
    std::vector<SparseRow> sys(h.codomain->rank());
    for (std::size_t k = 0; k < h.codomain->rank(); ++k)
        for (std::size_t j = 0; j < h.domain->rank(); ++j) {
            long c = to_ll_checked(h.mat.at(k, j));
            if (c != 0) sys[k].emplace_back(j, c);
        }
    auto gens = congruence_kernel(h.domain->rank(), colmod, sys, rowmod);
    std::vector<GroupElement> ker_gens;
    for (auto& v : gens) ker_gens.push_back(element(h.domain, std::move(v)));
    std::vector<GroupElement> im_gens;
    for (std::size_t j = 0; j < h.domain->rank(); ++j) im_gens.push_back(h.apply_generator(j));
    return {Subgroup(h.domain, std::move(ker_gens)), Subgroup(h.codomain, std::move(im_gens))};
}

QuotientResult quotient(GroupPtr g, const Subgroup& s) {
    if (!(*s.parent() == *g)) throw std::invalid_argument("quotient: subgroup of a different group");
    const std::size_t n = g->rank();
    const TriangularBasis& w = s.lattice();
    IntMat wt(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) wt.at(j, i) = w.row(i)[j];
    SnfOptions opts;
    opts.want_u = true;
    opts.want_uinv = true;
    opts.want_v = false;
    SnfResult res = snf(wt, opts);

    std::vector<std::size_t> kept;
    std::vector<Int> qmod;
    for (std::size_t i = 0; i < n; ++i) {
        if (res.s.at(i, i) != 1) {
            kept.push_back(i);
            qmod.push_back(res.s.at(i, i));
        }
    }
    GroupPtr q = FinAbGroup::make(std::move(qmod));
    IntMat proj(q->rank(), n);
    for (std::size_t r = 0; r < kept.size(); ++r)
        for (std::size_t c = 0; c < n; ++c) proj.at(r, c) = res.u.at(kept[r], c);
    AbHom projection = AbHom::make(g, q, std::move(proj));
    std::vector<GroupElement> lifts;
    for (std::size_t r = 0; r < kept.size(); ++r) {
        std::vector<Int> lift(n);
        for (std::size_t c = 0; c < n; ++c) lift[c] = res.uinv.at(c, kept[r]);
        lifts.push_back(element(g, std::move(lift)));
    }
    return QuotientResult{std::move(q), std::move(projection), std::move(lifts)};
}

std::optional<GroupElement> SubgroupPresentation::coordinates(const GroupElement& x) const {
    if (!(*x.parent == *inclusion.codomain)) throw std::invalid_argument("coordinates: parent mismatch");
    std::vector<long> v(x.coeffs.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = to_ll_checked(x.coeffs[i]);
    std::vector<long> z;
    if (!lattice->reduce(v, &z)) return std::nullopt;
    std::vector<Int> out(group->rank(), 0);
    for (std::size_t r = 0; r < group->rank(); ++r)
        for (std::size_t c = 0; c < z.size(); ++c) out[r] += u.at(r, c) * z[c];
    return element(group, std::move(out));
}

SubgroupPresentation subgroup_as_group(const Subgroup& s) {
    const GroupPtr& parent = s.parent();
    const std::size_t n = parent->rank();
    const TriangularBasis& w = s.lattice();

    // Relation lattice K = (W^T)^-1 * diag(moduli), solved column by column by
    // forward substitution (W^T is lower triangular; divisions are exact).
    IntMat k(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Int> rhs(n, 0);
        rhs[j] = parent->moduli()[j];
        for (std::size_t i = 0; i < n; ++i) {
            Int acc = rhs[i];
            for (std::size_t t = 0; t < i; ++t) acc -= Int(w.row(t)[i]) * k.at(t, j);
            Int z;
            mpz_divexact(z.get_mpz_t(), acc.get_mpz_t(), Int(w.row(i)[i]).get_mpz_t());
            k.at(i, j) = z;
        }
    }
    SnfOptions opts;
    opts.want_u = true;
    opts.want_uinv = true;
    opts.want_v = false;
    SnfResult res = snf(k, opts);

    std::vector<std::size_t> kept;
    std::vector<Int> mods;
    for (std::size_t i = 0; i < n; ++i)
        if (res.s.at(i, i) != 1) {
            kept.push_back(i);
            mods.push_back(res.s.at(i, i));
        }
    GroupPtr grp = FinAbGroup::make(std::move(mods));

    IntMat incl(n, grp->rank());
    for (std::size_t c = 0; c < kept.size(); ++c) {
        // abstract generator c lifts to z = uinv * e_kept[c]; its parent
        // coordinates are W^T z.
        for (std::size_t row = 0; row < n; ++row) {
            Int acc = 0;
            for (std::size_t i = 0; i < n; ++i) acc += Int(w.row(i)[row]) * res.uinv.at(i, kept[c]);
            incl.at(row, c) = acc;
        }
    }
    AbHom inclusion = AbHom::make(grp, parent, std::move(incl));

    IntMat ukept(grp->rank(), n);
    for (std::size_t r = 0; r < kept.size(); ++r)
        for (std::size_t c = 0; c < n; ++c) ukept.at(r, c) = res.u.at(kept[r], c);

    return SubgroupPresentation{grp, std::move(inclusion), std::make_shared<TriangularBasis>(w), std::move(ukept)};
}

AbHom HomGroup::to_hom(const GroupElement& e) const {
    if (!(*e.parent == *group)) throw std::invalid_argument("to_hom: element not in the hom group");
    IntMat m(codomain->rank(), domain->rank());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [j, k] = pairs[i];
        Int g = gcd(domain->moduli()[j], codomain->moduli()[k]);
        m.at(k, j) += e.coeffs[i] * (codomain->moduli()[k] / g);
    }
    return AbHom::make(domain, codomain, std::move(m));
}

GroupElement HomGroup::from_hom(const AbHom& h) const {
    if (!(*h.domain == *domain) || !(*h.codomain == *codomain))
        throw std::invalid_argument("from_hom: homomorphism has wrong domain or codomain");
    std::vector<Int> coeffs(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [j, k] = pairs[i];
        Int g = gcd(domain->moduli()[j], codomain->moduli()[k]);
        Int step = codomain->moduli()[k] / g;
        const Int& m = h.mat.at(k, j);
        if (m % step != 0) throw std::invalid_argument("from_hom: matrix entry not in the hom lattice");
        coeffs[i] = m / step;
    }
    return element(group, std::move(coeffs));
}

HomGroup hom_group(GroupPtr a, GroupPtr b) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<Int> mods;
    for (std::size_t j = 0; j < a->rank(); ++j)
        for (std::size_t k = 0; k < b->rank(); ++k) {
            Int g = gcd(a->moduli()[j], b->moduli()[k]);
            if (g != 1) {
                pairs.emplace_back(j, k);
                mods.push_back(g);
            }
        }
    return HomGroup{std::move(a), std::move(b), FinAbGroup::make(std::move(mods)), std::move(pairs)};
}

}  // namespace liecohom
