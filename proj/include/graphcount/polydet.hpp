#pragma once

// Literal determinants of polynomial matrices. This module exists to
// validate, by direct elimination, the same determinants the counting
// routes expand as products over cycle lengths; it must stay an
// independent computation, so nothing here reuses those expansions.

#include <cstddef>
#include <vector>

#include "graphcount/perm.hpp"
#include "graphcount/poly.hpp"

namespace graphcount {

/// Literal elimination on an m x m polynomial matrix is refused above
/// this size (cost grows like m^3 polynomial multiplications).
inline constexpr unsigned kCharDetGuard = 15;
/// Cofactor expansion is factorial; refuse above this size.
inline constexpr unsigned kCofactorGuard = 8;

/// Dense matrix over Z[z].
class PolyMatrix {
public:
    PolyMatrix(size_t rows, size_t cols);
    static PolyMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    IntPoly& at(size_t i, size_t j) { return cells_[i * cols_ + j]; }
    const IntPoly& at(size_t i, size_t j) const { return cells_[i * cols_ + j]; }

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<IntPoly> cells_;
};

/// 0/1 matrix of a permutation: entry (p(j), j) is 1.
PolyMatrix perm_to_matrix(const Permutation& p);

/// The matrix 1 - A z^power for the permutation matrix A of p.
PolyMatrix identity_minus_scaled(const Permutation& p, unsigned power);

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
/// Every division is exact in Z[z]; a remainder is a ConsistencyError.
IntPoly bareiss_determinant(PolyMatrix m);

/// Determinant by first-column cofactor expansion. Exponential; used as
/// a second opinion on small matrices.
IntPoly cofactor_determinant(const PolyMatrix& m, unsigned guard = kCofactorGuard);

/// det(1 - A z^power) for the slot permutation p, by literal elimination.
IntPoly char_like_det(const Permutation& slot_perm, unsigned power,
                      unsigned guard = kCharDetGuard);

/// det(1 - A z^2) / det(1 - A z) for an induced pair permutation, both
/// determinants computed by literal elimination, the quotient exact.
IntPoly det_ratio_literal(const PairPermutation& alpha,
                          unsigned guard = kCharDetGuard);

} // namespace graphcount
