#pragma once

// Counting series for graphs on n nodes under the induced action of S_n
// on edge slots:
//   g_n(z): simple graphs by edge count, a polynomial of degree n(n-1)/2,
//           computed by three independent routes that must agree exactly;
//   m_n(z): multigraphs by edge count (parallel edges allowed), a power
//           series reported up to a chosen truncation degree.
// All coefficients are exact integers; every group average asserts that
// the division by n! leaves no remainder.

#include <vector>

#include <gmpxx.h>

#include "graphcount/perm.hpp"
#include "graphcount/poly.hpp"

namespace graphcount {

/// The element-by-element route scans all n! permutations; refuse above
/// this degree unless the caller raises the guard deliberately.
inline constexpr unsigned kElementSumGuard = 8;

/// Edge-count distribution of simple graphs on n nodes: counts[i] is the
/// number of isomorphism classes with exactly i edges.
struct GraphCountVector {
    unsigned n = 0;
    std::vector<mpz_class> counts; // size n(n-1)/2 + 1

    GraphCountVector(unsigned n, std::vector<mpz_class> counts);
    IntPoly poly() const;
    /// Total number of graphs on n nodes (the value at z = 1).
    mpz_class total() const;
};

/// Truncated multigraph counting series: counts[k] is the number of
/// multigraph isomorphism classes with exactly k edges, k <= max_degree.
struct MultigraphSeriesVector {
    unsigned n = 0;
    unsigned max_degree = 0;
    std::vector<mpz_class> counts; // size max_degree + 1

    MultigraphSeriesVector(unsigned n, unsigned max_degree,
                           std::vector<mpz_class> counts);
};

/// One monomial of a cycle index: coeff * prod_k s_k^{exponents.count(k)}.
struct CycleIndexTerm {
    mpq_class coeff;
    CycleType exponents;
};

/// A cycle index in the variables s_1..s_degree. Terms with equal
/// exponent patterns are merged; terms are kept in descending
/// lexicographic exponent order.
class CycleIndex {
public:
    explicit CycleIndex(unsigned degree) : degree_(degree) {}

    unsigned degree() const { return degree_; }
    const std::vector<CycleIndexTerm>& terms() const { return terms_; }
    void add_term(const mpq_class& coeff, const CycleType& exponents);

    /// Substitute s_k -> 1 + z^k (each cycle of slots carries an edge or not).
    RatPoly substitute_one_plus_power() const;
    /// Value at s_k = 1 for all k; equals 1 for any group average.
    mpq_class coefficient_sum() const;

private:
    unsigned degree_ = 0;
    std::vector<CycleIndexTerm> terms_;
};

/// Cycle index of the pair group: the action of S_n on the m = n(n-1)/2
/// edge slots, one merged term per induced cycle structure, coefficients
/// class_size / n!.
CycleIndex pair_group_cycle_index(unsigned n);

/// Number of i-element slot subsets fixed by an element with the given
/// induced cycle type. A fixed subset is a union of whole cycles, so this
/// is a sum of binomial products over ways to pick cycles of total length i.
mpz_class fixed_subset_count(const CycleType& pair_type, unsigned i);

/// All fixed-subset counts of one element as a polynomial: coefficient i
/// is fixed_subset_count(pair_type, i).
IntPoly trace_genfunc_of_element(const CycleType& pair_type);

/// g_n(z) by the determinant-ratio route: per conjugacy class, expand
/// det(1 - A z^2) and det(1 - A z) of the induced slot permutation A as
/// products over cycle lengths and divide exactly; average over classes.
GraphCountVector simple_genfunc_det(unsigned n, unsigned threads = 0);

/// g_n(z) by cycle-index substitution s_k -> 1 + z^k.
GraphCountVector simple_genfunc_harary(unsigned n);

/// g_n(z) by the literal average of fixed-subset counts over all n!
/// permutations, no class grouping. Guarded against large n.
GraphCountVector simple_genfunc_element(unsigned n,
                                        unsigned guard = kElementSumGuard);

/// m_n(z) up to max_degree: the class-summed average of the series
/// prod_k (1 - z^k)^{-j_k} over induced cycle types.
MultigraphSeriesVector multigraph_series(unsigned n, unsigned max_degree,
                                         unsigned threads = 0);
/// Default truncation at m = n(n-1)/2.
MultigraphSeriesVector multigraph_series(unsigned n);

} // namespace graphcount
