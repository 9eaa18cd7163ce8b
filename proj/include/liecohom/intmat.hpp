#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace liecohom {

using Int = mpz_class;

/// Dense integer matrix with arbitrary-precision entries.
class IntMat {
public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    IntMat transposed() const;
    bool is_zero() const;
    bool operator==(const IntMat& other) const = default;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    /// row_i += q * row_j
    void add_row(std::size_t i, std::size_t j, const Int& q);
    /// col_i += q * col_j
    void add_col(std::size_t i, std::size_t j, const Int& q);
    void negate_row(std::size_t i);
    void negate_col(std::size_t i);

    std::string str() const;

    friend IntMat operator*(const IntMat& a, const IntMat& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> a_;
};

struct SnfOptions {
    bool want_u = true;
    bool want_v = true;
    bool want_uinv = false;
    bool want_vinv = false;
};

/// u * m * v = s with s diagonal, d1 | d2 | ..., di >= 0, and u, v unimodular.
struct SnfResult {
    IntMat s;
    IntMat u, v, uinv, vinv;
    std::vector<Int> diagonal() const;
};

SnfResult snf(const IntMat& m, const SnfOptions& opts = {});

/// Canonical row-style Hermite normal form: echelon rows with positive pivots,
/// entries above each pivot reduced into [0, pivot); zero rows dropped.
IntMat hnf_rows(const IntMat& m);

}  // namespace liecohom
