#include "liecohom/intmat.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace liecohom {

IntMat IntMat::identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::transposed() const {
    IntMat t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

bool IntMat::is_zero() const {
    for (const Int& x : a_)
        if (x != 0) return false;
    return true;
}

void IntMat::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMat::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMat::add_row(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) += q * at(j, c);
}

void IntMat::add_col(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) at(r, i) += q * at(r, j);
}

void IntMat::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMat::negate_col(std::size_t i) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, i) = -at(r, i);
}

std::string IntMat::str() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r == 0 ? "[" : " ");
        for (std::size_t c = 0; c < cols_; ++c) os << at(r, c) << (c + 1 < cols_ ? " " : "");
        os << (r + 1 < rows_ ? "\n" : "]");
    }
    return os.str();
}

IntMat operator*(const IntMat& a, const IntMat& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("IntMat multiply: shape mismatch");
    IntMat c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

std::vector<Int> SnfResult::diagonal() const {
    std::size_t n = std::min(s.rows(), s.cols());
    std::vector<Int> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = s.at(i, i);
    return d;
}

namespace {

// Bookkeeping wrapper: applies each transform to s and mirrors it on the
// tracked unimodular factors so that u*m*v = s stays invariant.
struct SnfWork {
    IntMat s;
    IntMat u, v, uinv, vinv;
    bool tu, tv, tui, tvi;

    void swap_rows(std::size_t i, std::size_t j) {
        s.swap_rows(i, j);
        if (tu) u.swap_rows(i, j);
        if (tui) uinv.swap_cols(i, j);
    }
    void swap_cols(std::size_t i, std::size_t j) {
        s.swap_cols(i, j);
        if (tv) v.swap_cols(i, j);
        if (tvi) vinv.swap_rows(i, j);
    }
    void add_row(std::size_t i, std::size_t j, const Int& q) {
        s.add_row(i, j, q);
        if (tu) u.add_row(i, j, q);
        if (tui) uinv.add_col(j, i, -q);
    }
    void add_col(std::size_t i, std::size_t j, const Int& q) {
        s.add_col(i, j, q);
        if (tv) v.add_col(i, j, q);
        if (tvi) vinv.add_row(j, i, -q);
    }
    void negate_row(std::size_t i) {
        s.negate_row(i);
        if (tu) u.negate_row(i);
        if (tui) uinv.negate_col(i);
    }
};

// Smallest nonzero |entry| in the submatrix at (t,t); ties broken by (row, col).
bool find_pivot(const IntMat& s, std::size_t t, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < s.rows(); ++i)
        for (std::size_t j = t; j < s.cols(); ++j) {
            const Int& x = s.at(i, j);
            if (x == 0) continue;
            Int ax = abs(x);
            if (!found || ax < best) {
                found = true;
                best = ax;
                pr = i;
                pc = j;
                if (best == 1) return true;
            }
        }
    return found;
}

}  // namespace

SnfResult snf(const IntMat& m, const SnfOptions& opts) {
    const std::size_t r = m.rows(), c = m.cols();
    SnfWork w{m,
              opts.want_u ? IntMat::identity(r) : IntMat{},
              opts.want_v ? IntMat::identity(c) : IntMat{},
              opts.want_uinv ? IntMat::identity(r) : IntMat{},
              opts.want_vinv ? IntMat::identity(c) : IntMat{},
              opts.want_u,
              opts.want_v,
              opts.want_uinv,
              opts.want_vinv};

    const std::size_t n = std::min(r, c);
    for (std::size_t t = 0; t < n; ++t) {
        std::size_t pr = t, pc = t;
        if (!find_pivot(w.s, t, pr, pc)) break;
        w.swap_rows(t, pr);
        w.swap_cols(t, pc);
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (w.s.at(i, t) == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), w.s.at(i, t).get_mpz_t(), w.s.at(t, t).get_mpz_t());
                w.add_row(i, t, -q);
                if (w.s.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (w.s.at(t, j) == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), w.s.at(t, j).get_mpz_t(), w.s.at(t, t).get_mpz_t());
                w.add_col(j, t, -q);
                if (w.s.at(t, j) != 0) clean = false;
            }
            if (clean) break;
            // A nonzero remainder is strictly smaller than the pivot; move it up.
            std::size_t br = t, bc = t;
            find_pivot(w.s, t, br, bc);
            w.swap_rows(t, br);
            w.swap_cols(t, bc);
        }
        if (w.s.at(t, t) < 0) w.negate_row(t);
    }

    // Divisibility chain d_i | d_{i+1}.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (w.s.at(j, j) == 0 && w.s.at(i, i) == 0) continue;
            if (w.s.at(i, i) != 0 && w.s.at(j, j) % w.s.at(i, i) == 0) continue;
            // Fold column j into the (i, j) block and rediagonalize it.
            w.add_col(i, j, 1);
            for (;;) {
                if (w.s.at(j, i) != 0) {
                    if (w.s.at(i, i) == 0 || (w.s.at(j, i) != 0 && abs(w.s.at(j, i)) < abs(w.s.at(i, i))))
                        w.swap_rows(i, j);
                    Int q;
                    mpz_tdiv_q(q.get_mpz_t(), w.s.at(j, i).get_mpz_t(), w.s.at(i, i).get_mpz_t());
                    w.add_row(j, i, -q);
                    if (w.s.at(j, i) != 0) continue;
                }
                if (w.s.at(i, j) != 0) {
                    Int q;
                    mpz_tdiv_q(q.get_mpz_t(), w.s.at(i, j).get_mpz_t(), w.s.at(i, i).get_mpz_t());
                    w.add_col(j, i, -q);
                    if (w.s.at(i, j) != 0) {
                        w.swap_cols(i, j);
                        continue;
                    }
                }
                break;
            }
            if (w.s.at(i, i) < 0) w.negate_row(i);
            if (w.s.at(j, j) < 0) w.negate_row(j);
        }
    }

    return SnfResult{std::move(w.s), std::move(w.u), std::move(w.v), std::move(w.uinv), std::move(w.vinv)};
}

IntMat hnf_rows(const IntMat& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    // Echelon pass: pivot_row[c] is the basis row with leading column c, if any.
    std::vector<std::vector<Int>> pivot_row(cols);
    auto leading = [cols](const std::vector<Int>& v) {
        for (std::size_t c = 0; c < cols; ++c)
            if (v[c] != 0) return c;
        return cols;
    };
    for (std::size_t r = 0; r < rows; ++r) {
        std::vector<Int> v(cols);
        for (std::size_t c = 0; c < cols; ++c) v[c] = m.at(r, c);
        for (std::size_t lead = leading(v); lead < cols; lead = leading(v)) {
            auto& b = pivot_row[lead];
            if (b.empty()) {
                if (v[lead] < 0)
                    for (auto& x : v) x = -x;
                b = std::move(v);
                break;
            }
            Int g, p, q;
            mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), b[lead].get_mpz_t(), v[lead].get_mpz_t());
            Int bg = b[lead] / g, vg = v[lead] / g;
            for (std::size_t c = lead; c < cols; ++c) {
                Int nb = p * b[c] + q * v[c];
                Int nv = bg * v[c] - vg * b[c];
                b[c] = nb;
                v[c] = nv;
            }
        }
    }
    std::vector<std::pair<std::size_t, std::vector<Int>>> basis;
    for (std::size_t c = 0; c < cols; ++c)
        if (!pivot_row[c].empty()) basis.emplace_back(c, std::move(pivot_row[c]));
    // Reduce entries above each pivot into [0, pivot).
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const auto& [pc, b] = basis[k];
        for (std::size_t i = 0; i < k; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), basis[i].second[pc].get_mpz_t(), b[pc].get_mpz_t());
            if (q == 0) continue;
            for (std::size_t c = 0; c < cols; ++c) basis[i].second[c] -= q * b[c];
        }
    }
    IntMat h(basis.size(), cols);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t c = 0; c < cols; ++c) h.at(i, c) = basis[i].second[c];
    return h;
}

}  // namespace liecohom
