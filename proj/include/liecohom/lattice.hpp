#pragma once

static_assert(sizeof(long) == 8, "the lattice engine relies on 64-bit long");

#include "liecohom/intmat.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace liecohom {

/// Largest column modulus the int64 lattice engine accepts. Every stored
/// entry is reduced below its column modulus, so intermediate products stay
/// within 2^61 and never overflow.
inline constexpr long kLatticeModulusBound = 1ll << 30;

long to_ll_checked(const Int& x);

/// Sparse integer row: sorted (column, coefficient) pairs, coefficients nonzero.
using SparseRow = std::vector<std::pair<std::size_t, long>>;

/// Upper-triangular basis of an integer lattice in Z^n that contains
/// diag(colmod) * Z^n. Row j has its pivot at column j; all entries are kept
/// reduced modulo their column modulus.
class TriangularBasis {
public:
    explicit TriangularBasis(std::vector<long> colmod);

    std::size_t dim() const { return n_; }
    long col_modulus(std::size_t j) const { return colmod_[j]; }
    long pivot(std::size_t j) const { return rows_[j][j]; }
    const std::vector<long>& row(std::size_t j) const { return rows_[j]; }

    /// Enlarges the lattice by the vector v (length n, any integers).
    void insert(const std::vector<long>& v);
    void insert(const SparseRow& v);

    /// Unique form: entries above each pivot reduced into [0, pivot).
    void canonicalize();
    bool canonical() const { return canonical_; }

    /// Reduces x (entries reduced mod colmod first) against the basis.
    /// Returns true iff x is in the lattice; then x ends up zero. When
    /// coeffs is given it receives z with sum_j z_j * row_j = x modulo
    /// diag(colmod) contributions.
    bool reduce(std::vector<long>& x, std::vector<long>* coeffs = nullptr) const;

    bool contains(const std::vector<long>& x) const;

    /// det = product of pivots = [Z^n : lattice].
    Int determinant() const;

    bool operator==(const TriangularBasis& other) const;

private:
    std::size_t n_;
    std::vector<long> colmod_;
    std::vector<std::vector<long>> rows_;
    bool canonical_ = true;  // the seeded diagonal is canonical
};

/// Generators of the solution subgroup
///   { x in prod_j Z/colmod[j] : rows[i] . x = 0 mod rowmod[i] for all i }.
/// Each returned vector is reduced into the canonical coefficient range.
/// Requires rowmod[i] | coeff * colmod[j] for every row entry, so the system
/// is well defined on the quotient.
std::vector<std::vector<Int>> congruence_kernel(std::size_t ncols,
                                                const std::vector<long>& colmod,
                                                const std::vector<SparseRow>& rows,
                                                const std::vector<long>& rowmod);

/// One solution x of rows[i] . x = rhs[i] mod rowmod[i], if any.
std::optional<std::vector<Int>> congruence_solve(std::size_t ncols,
                                                 const std::vector<long>& colmod,
                                                 const std::vector<SparseRow>& rows,
                                                 const std::vector<long>& rowmod,
                                                 const std::vector<long>& rhs);

}  // namespace liecohom
