#include "graphcount/polydet.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "graphcount/errors.hpp"

namespace graphcount {

PolyMatrix::PolyMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), cells_(rows * cols) {}

PolyMatrix PolyMatrix::identity(size_t n) {
    PolyMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = IntPoly::constant(1);
    return m;
}

PolyMatrix perm_to_matrix(const Permutation& p) {
    PolyMatrix m(p.degree(), p.degree());
    for (unsigned j = 0; j < p.degree(); ++j) m.at(p(j), j) = IntPoly::constant(1);
    return m;
}

PolyMatrix identity_minus_scaled(const Permutation& p, unsigned power) {
    PolyMatrix m = PolyMatrix::identity(p.degree());
    for (unsigned j = 0; j < p.degree(); ++j) {
        m.at(p(j), j) = m.at(p(j), j) - IntPoly::monomial(1, power);
    }
    return m;
}

IntPoly bareiss_determinant(PolyMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    size_t n = m.rows();
    if (n == 0) return IntPoly::constant(1);
    int sign = 1;
    IntPoly prev_pivot = IntPoly::constant(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t pivot = k;
        while (pivot < n && m.at(pivot, k).is_zero()) ++pivot;
        if (pivot == n) return IntPoly();
        if (pivot != k) {
            sign = -sign;
            for (size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
        }
        // Sylvester identity: each updated entry is a minor of the original
        // matrix times prev_pivot, so the division is exact in Z[z].
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                IntPoly num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = exact_quotient(num, prev_pivot);
            }
            m.at(i, k) = IntPoly();
        }
        prev_pivot = m.at(k, k);
    }
    IntPoly det = m.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

namespace {

IntPoly cofactor_rec(const PolyMatrix& m, std::vector<size_t>& rows, size_t col) {
    if (rows.size() == 1) return m.at(rows[0], col);
    IntPoly det;
    for (size_t r = 0; r < rows.size(); ++r) {
        const IntPoly& entry = m.at(rows[r], col);
        if (entry.is_zero()) continue;
        size_t removed = rows[r];
        rows.erase(rows.begin() + static_cast<ptrdiff_t>(r));
        IntPoly minor = cofactor_rec(m, rows, col + 1);
        rows.insert(rows.begin() + static_cast<ptrdiff_t>(r), removed);
        IntPoly term = entry * minor;
        det = (r % 2 == 0) ? det + term : det - term;
    }
    return det;
}

} // namespace

IntPoly cofactor_determinant(const PolyMatrix& m, unsigned guard) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (m.rows() > guard) {
        throw GuardError("cofactor expansion on a " + std::to_string(m.rows()) +
                         "x" + std::to_string(m.rows()) + " matrix (guard size <= " +
                         std::to_string(guard) + "); use the elimination route");
    }
    if (m.rows() == 0) return IntPoly::constant(1);
    std::vector<size_t> rows(m.rows());
    for (size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    return cofactor_rec(m, rows, 0);
}

IntPoly char_like_det(const Permutation& slot_perm, unsigned power, unsigned guard) {
    if (slot_perm.degree() > guard) {
        throw GuardError("literal elimination on a " + std::to_string(slot_perm.degree()) +
                         "x" + std::to_string(slot_perm.degree()) +
                         " polynomial matrix (guard size <= " + std::to_string(guard) +
                         "); use the cycle-length product instead");
    }
    return bareiss_determinant(identity_minus_scaled(slot_perm, power));
}

IntPoly det_ratio_literal(const PairPermutation& alpha, unsigned guard) {
    IntPoly num = char_like_det(alpha.slots(), 2, guard);
    IntPoly den = char_like_det(alpha.slots(), 1, guard);
    return exact_quotient(num, den);
}

} // namespace graphcount
