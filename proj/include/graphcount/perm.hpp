#pragma once

// Permutations of [n], integer partitions / conjugacy classes of S_n, and
// the induced action on unordered pairs (the pair group S_n^(2)).
//
// Points and edge slots are 0-based internally. Edge slots enumerate the
// 2-subsets of {0..n-1} in lexicographic order:
//   {0,1}, {0,2}, ..., {0,n-1}, {1,2}, ..., {n-2,n-1}.

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "graphcount/errors.hpp"

namespace graphcount {

/// Refuse n!-element enumeration above this degree unless the caller
/// raises the guard explicitly.
inline constexpr unsigned kPermEnumGuard = 10;

mpz_class factorial(unsigned n);

/// A permutation in one-line notation: images()[i] is where point i goes.
class Permutation {
public:
    Permutation() = default; // identity on the empty set
    explicit Permutation(std::vector<unsigned> images);
    static Permutation identity(unsigned n);
    /// Build from disjoint cycles; points not mentioned are fixed.
    static Permutation from_cycles(unsigned n, const std::vector<std::vector<unsigned>>& cycles);

    unsigned degree() const { return static_cast<unsigned>(images_.size()); }
    unsigned operator()(unsigned i) const { return images_[i]; }
    const std::vector<unsigned>& images() const { return images_; }

    /// Composition: (s * t)(i) = s(t(i)).
    Permutation operator*(const Permutation& rhs) const;
    Permutation inverse() const;
    bool is_identity() const;

    /// Disjoint cycle decomposition; each cycle starts at its smallest
    /// point, cycles ordered by smallest point. Fixed points included.
    std::vector<std::vector<unsigned>> cycles() const;

    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& rhs) const { return images_ < rhs.images_; }

private:
    std::vector<unsigned> images_;
};

/// Cycle-length multiset of a permutation of a set of size degree():
/// count(k) = number of cycles of length k. Invariant: sum k*count(k) = degree.
class CycleType {
public:
    CycleType() = default; // degree 0
    CycleType(unsigned degree, std::vector<unsigned> counts);
    /// From a descending (or any-order) list of cycle lengths.
    static CycleType from_parts(unsigned degree, const std::vector<unsigned>& parts);

    unsigned degree() const { return degree_; }
    /// j_k: number of cycles of length k (1-based k; 0 outside [1, degree]).
    unsigned count(unsigned k) const;
    unsigned total_cycles() const;
    const std::vector<unsigned>& counts() const { return counts_; }
    /// Cycle lengths with multiplicity, descending.
    std::vector<unsigned> parts() const;

    bool operator==(const CycleType&) const = default;
    bool operator<(const CycleType& rhs) const { return counts_ < rhs.counts_; }

private:
    unsigned degree_ = 0;
    std::vector<unsigned> counts_; // counts_[k-1] = j_k, size = degree_
};

CycleType cycle_type(const Permutation& p);

/// The bijection between edge slots {0..m-1} and 2-subsets of {0..n-1},
/// m = n(n-1)/2, in lexicographic pair order.
class EdgeIndexing {
public:
    explicit EdgeIndexing(unsigned n);

    unsigned vertex_count() const { return n_; }
    unsigned slot_count() const { return m_; }
    std::pair<unsigned, unsigned> pair_of(unsigned slot) const { return pair_of_[slot]; }
    unsigned slot_of(unsigned i, unsigned j) const;

private:
    unsigned n_ = 0;
    unsigned m_ = 0;
    std::vector<std::pair<unsigned, unsigned>> pair_of_;
    std::vector<unsigned> slot_table_; // n*n, upper triangle used
};

/// Number of unordered pairs on n points.
inline unsigned pair_count(unsigned n) { return n * (n - 1) / 2; }

/// An element of the pair group S_n^(2): the permutation of the m edge
/// slots induced by a vertex permutation. Kept with its vertex count so
/// degenerate cases (n = 1, m = 0) stay unambiguous.
class PairPermutation {
public:
    PairPermutation() = default;
    PairPermutation(unsigned vertex_count, Permutation slot_perm);

    unsigned vertex_count() const { return n_; }
    unsigned slot_count() const { return slots_.degree(); }
    unsigned operator()(unsigned slot) const { return slots_(slot); }
    const Permutation& slots() const { return slots_; }

    PairPermutation operator*(const PairPermutation& rhs) const;
    bool operator==(const PairPermutation&) const = default;

private:
    unsigned n_ = 0;
    Permutation slots_;
};

/// A conjugacy class of S_n: its cycle type and exact size
/// n! / prod_k (k^{j_k} * j_k!).
struct PartitionClass {
    CycleType cycle_type;
    mpz_class class_size;
};

/// One entry per integer partition of n, in descending lexicographic
/// order of parts; class sizes sum to n!.
std::vector<PartitionClass> enumerate_partition_classes(unsigned n);

mpz_class conjugacy_class_size(const CycleType& lambda);

/// All n! permutations of degree n, lexicographic order. Refuses with a
/// GuardError above the guard; use the conjugacy-class paths instead.
template <typename F>
void for_each_permutation(unsigned n, F&& fn, unsigned guard = kPermEnumGuard) {
    if (n > guard) {
        throw GuardError("refusing to enumerate " + std::to_string(n) +
                         "! permutations (guard n <= " + std::to_string(guard) +
                         "); use the class-summed paths instead");
    }
    std::vector<unsigned> v(n);
    for (unsigned i = 0; i < n; ++i) v[i] = i;
    do {
        fn(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

std::vector<Permutation> all_permutations(unsigned n, unsigned guard = kPermEnumGuard);

/// The pair-group element induced by a vertex permutation:
/// slot {i,j} goes to slot {sigma(i), sigma(j)}.
PairPermutation induce_pair_perm(const Permutation& sigma, const EdgeIndexing& idx);

/// Deterministic class representative: cycles of decreasing length laid
/// out over consecutive points.
Permutation class_representative(const CycleType& lambda);

/// Cycle type of the induced pair permutation, computed from one class
/// representative (a class function, so any representative agrees).
CycleType pair_cycle_type_of_class(const CycleType& lambda, const EdgeIndexing& idx);

} // namespace graphcount
