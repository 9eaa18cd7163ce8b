#include "liecohom/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace liecohom {

long to_ll_checked(const Int& x) {
    if (!x.fits_slong_p()) throw std::overflow_error("integer too large for the int64 lattice engine");
    return x.get_si();
}

namespace {

long mod_reduce(long x, long m) {
    long r = x % m;
    return r < 0 ? r + m : r;
}

Int mod_reduce(const Int& x, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

// p*a + q*b = g for a, b >= 0.
long ext_gcd(long a, long b, long& p, long& q) {
    long old_r = a, r = b;
    long old_s = 1, s = 0;
    long old_t = 0, t = 1;
    while (r != 0) {
        long quot = old_r / r;
        long tmp = old_r - quot * r;
        old_r = r;
        r = tmp;
        tmp = old_s - quot * s;
        old_s = s;
        s = tmp;
        tmp = old_t - quot * t;
        old_t = t;
        t = tmp;
    }
    p = old_s;
    q = old_t;
    return old_r;
}

long lcm_checked(long a, long b) {
    long g = std::gcd(a, b);
    long l = (a / g);
    if (b > kLatticeModulusBound / l) throw std::overflow_error("row modulus lcm exceeds the lattice engine bound");
    return l * b;
}

}  // namespace

TriangularBasis::TriangularBasis(std::vector<long> colmod)
    : n_(colmod.size()), colmod_(std::move(colmod)), rows_(n_) {
    for (std::size_t j = 0; j < n_; ++j) {
        if (colmod_[j] < 1 || colmod_[j] > kLatticeModulusBound)
            throw std::domain_error("lattice: column modulus out of supported range");
        rows_[j].assign(n_, 0);
        rows_[j][j] = colmod_[j];
    }
}

void TriangularBasis::insert(const std::vector<long>& v0) {
    if (v0.size() != n_) throw std::invalid_argument("lattice insert: dimension mismatch");
    std::vector<long> v(n_);
    bool nonzero = false;
    for (std::size_t j = 0; j < n_; ++j) {
        v[j] = mod_reduce(v0[j], colmod_[j]);
        nonzero = nonzero || v[j] != 0;
    }
    if (!nonzero) return;
    for (std::size_t c = 0; c < n_; ++c) {
        if (v[c] == 0) continue;
        auto& b = rows_[c];
        if (v[c] % b[c] == 0) {
            long q = v[c] / b[c];
            v[c] = 0;
            for (std::size_t k = c + 1; k < n_; ++k) v[k] = mod_reduce(v[k] - q * b[k], colmod_[k]);
        } else {
            long p, q;
            long g = ext_gcd(b[c], v[c], p, q);
            long bg = b[c] / g, vg = v[c] / g;
            for (std::size_t k = c + 1; k < n_; ++k) {
                long nb = mod_reduce(p * b[k] + q * v[k], colmod_[k]);
                long nv = mod_reduce(bg * v[k] - vg * b[k], colmod_[k]);
                b[k] = nb;
                v[k] = nv;
            }
            b[c] = g;
            v[c] = 0;
            canonical_ = false;
        }
    }
}

void TriangularBasis::insert(const SparseRow& v) {
    std::vector<long> dense(n_, 0);
    for (const auto& [j, c] : v) {
        if (j >= n_) throw std::invalid_argument("lattice insert: column out of range");
        dense[j] = c;
    }
    insert(dense);
}

void TriangularBasis::canonicalize() {
    if (canonical_) return;
    for (std::size_t j = 0; j < n_; ++j) {
        const auto& b = rows_[j];
        for (std::size_t i = 0; i < j; ++i) {
            long q = rows_[i][j] / b[j];
            if (q == 0) continue;
            for (std::size_t k = j; k < n_; ++k) rows_[i][k] = mod_reduce(rows_[i][k] - q * b[k], colmod_[k]);
        }
    }
    canonical_ = true;
}

bool TriangularBasis::reduce(std::vector<long>& x, std::vector<long>* coeffs) const {
    if (x.size() != n_) throw std::invalid_argument("lattice reduce: dimension mismatch");
    if (coeffs) coeffs->assign(n_, 0);
    for (std::size_t c = 0; c < n_; ++c) x[c] = mod_reduce(x[c], colmod_[c]);
    for (std::size_t c = 0; c < n_; ++c) {
        if (x[c] == 0) continue;
        if (x[c] % rows_[c][c] != 0) return false;
        long q = x[c] / rows_[c][c];
        if (coeffs) (*coeffs)[c] = q;
        x[c] = 0;
        for (std::size_t k = c + 1; k < n_; ++k) x[k] = mod_reduce(x[k] - q * rows_[c][k], colmod_[k]);
    }
    return true;
}

bool TriangularBasis::contains(const std::vector<long>& x) const {
    std::vector<long> copy = x;
    return reduce(copy);
}

Int TriangularBasis::determinant() const {
    Int d = 1;
    for (std::size_t j = 0; j < n_; ++j) d *= rows_[j][j];
    return d;
}

bool TriangularBasis::operator==(const TriangularBasis& other) const {
    if (!canonical_ || !other.canonical_) throw std::logic_error("lattice compare requires canonical bases");
    return colmod_ == other.colmod_ && rows_ == other.rows_;
}

std::vector<std::vector<Int>> congruence_kernel(std::size_t ncols,
                                                const std::vector<long>& colmod,
                                                const std::vector<SparseRow>& rows,
                                                const std::vector<long>& rowmod) {
    if (colmod.size() != ncols) throw std::invalid_argument("congruence_kernel: column moduli mismatch");
    if (rows.size() != rowmod.size()) throw std::invalid_argument("congruence_kernel: row moduli mismatch");
    long n_mod = 1;
    for (long m : rowmod) {
        if (m < 1) throw std::invalid_argument("congruence_kernel: row modulus must be >= 1");
        n_mod = lcm_checked(n_mod, m);
    }
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [j, c] : rows[i]) {
            if (j >= ncols) throw std::invalid_argument("congruence_kernel: column index out of range");
            if ((Int(c) * colmod[j]) % rowmod[i] != 0)
                throw std::invalid_argument("congruence_kernel: system not well defined on the quotient");
        }

    TriangularBasis basis(std::vector<long>(ncols, n_mod));
    std::set<SparseRow> seen;
    std::vector<SparseRow> scaled;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        long s = n_mod / rowmod[i];
        SparseRow sr;
        for (const auto& [j, c] : rows[i]) {
            long cc = mod_reduce(mod_reduce(c, rowmod[i]) * s, n_mod);
            if (cc != 0) sr.emplace_back(j, cc);
        }
        std::sort(sr.begin(), sr.end());
        // Merge duplicate columns.
        SparseRow merged;
        for (const auto& e : sr) {
            if (!merged.empty() && merged.back().first == e.first) {
                merged.back().second = mod_reduce(merged.back().second + e.second, n_mod);
            } else {
                merged.push_back(e);
            }
        }
        std::erase_if(merged, [](const auto& e) { return e.second == 0; });
        if (merged.empty()) continue;
        if (seen.insert(merged).second) scaled.push_back(std::move(merged));
    }
    std::stable_sort(scaled.begin(), scaled.end(),
                     [](const SparseRow& a, const SparseRow& b) { return a.size() < b.size(); });
    for (const auto& r : scaled) basis.insert(r);

    IntMat m(ncols, ncols);
    for (std::size_t i = 0; i < ncols; ++i)
        for (std::size_t j = 0; j < ncols; ++j) m.at(i, j) = basis.row(i)[j];
    SnfOptions opts;
    opts.want_u = false;
    opts.want_v = true;
    SnfResult res = snf(m, opts);

    std::vector<std::vector<Int>> gens;
    for (std::size_t i = 0; i < ncols; ++i) {
        Int g = gcd(res.s.at(i, i), Int(n_mod));
        Int scale = n_mod / g;
        std::vector<Int> gen(ncols);
        bool nonzero = false;
        for (std::size_t j = 0; j < ncols; ++j) {
            gen[j] = mod_reduce(scale * res.v.at(j, i), Int(colmod[j]));
            nonzero = nonzero || gen[j] != 0;
        }
        if (nonzero) gens.push_back(std::move(gen));
    }
    return gens;
}

std::optional<std::vector<Int>> congruence_solve(std::size_t ncols,
                                                 const std::vector<long>& colmod,
                                                 const std::vector<SparseRow>& rows,
                                                 const std::vector<long>& rowmod,
                                                 const std::vector<long>& rhs) {
    if (rows.size() != rhs.size()) throw std::invalid_argument("congruence_solve: rhs size mismatch");
    long n_mod = 1;
    for (long m : rowmod) {
        if (m < 1) throw std::invalid_argument("congruence_solve: row modulus must be >= 1");
        n_mod = lcm_checked(n_mod, m);
    }
    if (n_mod == 1) return std::vector<Int>(ncols, 0);

    // Homogenize: solve for (x, t) with rows.x - t*rhs = 0, then hunt for t = 1.
    std::vector<SparseRow> rows2 = rows;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        long b = mod_reduce(-rhs[i], rowmod[i]);
        if (b != 0) rows2[i].emplace_back(ncols, b);
    }
    std::vector<long> colmod2 = colmod;
    colmod2.push_back(n_mod);
    auto gens = congruence_kernel(ncols + 1, colmod2, rows2, rowmod);

    Int cur_g = n_mod;
    std::vector<Int> cur_x(ncols, 0);
    for (const auto& gen : gens) {
        const Int& tau = gen[ncols];
        if (tau == 0) continue;
        Int g2, alpha, beta;
        mpz_gcdext(g2.get_mpz_t(), alpha.get_mpz_t(), beta.get_mpz_t(), cur_g.get_mpz_t(), tau.get_mpz_t());
        if (g2 == cur_g) continue;
        for (std::size_t j = 0; j < ncols; ++j)
            cur_x[j] = mod_reduce(alpha * cur_x[j] + beta * gen[j], Int(colmod[j]));
        cur_g = g2;
        if (cur_g == 1) break;
    }
    if (cur_g != 1) return std::nullopt;
    return cur_x;
}

}  // namespace liecohom
