#pragma once

// Brute-force classification of graphs up to isomorphism, by literal
// canonical forms: minimize over all n! induced images. Deliberately
// naive and kept independent from the counting pipelines so it can serve
// as their ground truth on small n.

#include <vector>

#include <gmpxx.h>

#include "graphcount/genfunc.hpp"
#include "graphcount/invariants.hpp"
#include "graphcount/perm.hpp"

namespace graphcount {

/// Canonicalizing 2^{n(n-1)/2} masks against n! images is refused above
/// this n.
inline constexpr unsigned kBruteSimpleGuard = 6;
/// Multigraph enumeration guards: vertex count and truncation degree.
inline constexpr unsigned kBruteMultiGuard = 5;
inline constexpr unsigned kBruteMultiDegreeGuard = 8;

/// Edge multiplicities, one entry per slot; the multigraph with
/// weights[s] parallel edges in slot s.
using WeightVector = std::vector<unsigned>;

/// Slot image table of every element of S_n (lexicographic order):
/// table[p][s] is where element p sends slot s.
std::vector<std::vector<unsigned>> induced_slot_images(unsigned n,
                                                       unsigned guard = kPermEnumGuard);

EdgeMask apply_slot_images(EdgeMask mask, const std::vector<unsigned>& images);

/// Minimum of the mask's orbit under all tabulated images.
EdgeMask canonical_mask(EdgeMask mask, const std::vector<std::vector<unsigned>>& tables);

/// Lexicographic minimum of the weight vector's orbit.
WeightVector canonical_weights(const WeightVector& weights,
                               const std::vector<std::vector<unsigned>>& tables);

/// Edge distribution of simple graphs by counting masks that equal their
/// own canonical form. Cross-checked internally against the fixed-point
/// average (number of orbits times n! must equal the sum over elements of
/// 2^{number of slot cycles}).
GraphCountVector brute_simple_counts(unsigned n, unsigned guard = kBruteSimpleGuard);

/// Multigraph counts up to max_degree edges by canonicalizing every
/// weight vector of total weight <= max_degree. Cross-checked internally
/// against a literal fixed-vector average per element.
MultigraphSeriesVector brute_multigraph_counts(
    unsigned n, unsigned max_degree, unsigned guard = kBruteMultiGuard,
    unsigned degree_guard = kBruteMultiDegreeGuard);

/// Number of orbits of i-subsets of slots as a class-summed average of
/// fixed-subset counts. A separate route from both the polynomial
/// pipelines and the canonical-form scan.
mpz_class burnside_subset_count(unsigned n, unsigned i);

} // namespace graphcount
