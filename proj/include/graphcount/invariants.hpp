#pragma once

// The invariant-theory layer over the edge-slot variables x_0..x_{m-1}:
// polynomials under the induced pair action, the group-averaging
// (Reynolds) projector, the exponent-capping reduction gamma onto
// squarefree polynomials, graded dimensions of the invariant algebra,
// and a self-contained reproduction of the worked example on 4 nodes.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "graphcount/perm.hpp"

namespace graphcount {

/// Group averaging scans all n! permutations; refuse above this degree.
inline constexpr unsigned kReynoldsGuard = 8;
/// The orbit scan walks all 2^{n(n-1)/2} edge masks; refuse above this n.
inline constexpr unsigned kOrbitGuard = 7;

/// Monomial over the m slot variables: exponents[s] is the power of x_s.
using Monomial = std::vector<unsigned>;

/// Cap every exponent at 1 (the reduction x^p -> x onto squarefree
/// monomials; its kernel is the ideal generated by x_s^2 - x_s).
Monomial gamma_monomial(const Monomial& mono);

/// Image of a monomial under a pair permutation: the exponent of x_s
/// moves to x_{alpha(s)}.
Monomial permute_monomial(const Monomial& mono, const PairPermutation& alpha);

/// Polynomial in the slot variables with exact rational coefficients,
/// stored sparsely by monomial. Zero coefficients are never kept.
class SymPoly {
public:
    SymPoly() = default;
    static SymPoly monomial(Monomial mono, const mpq_class& coeff = 1);

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, mpq_class>& terms() const { return terms_; }
    void add_term(const mpq_class& coeff, const Monomial& mono);

    SymPoly operator+(const SymPoly& rhs) const;
    SymPoly operator*(const mpq_class& scalar) const;
    bool operator==(const SymPoly&) const = default;

    SymPoly apply_perm(const PairPermutation& alpha) const;
    /// Apply gamma to every monomial; images that collide are summed.
    SymPoly gamma_image() const;

    std::string to_string() const;

private:
    std::map<Monomial, mpq_class> terms_;
};

/// R(mono) = (1/n!) sum over sigma of the permuted monomial. Accumulates
/// integer visit counts, so the n! division is exact by construction.
SymPoly reynolds_monomial(unsigned n, const Monomial& mono,
                          unsigned guard = kReynoldsGuard);

/// R(p) for a general polynomial.
SymPoly reynolds(unsigned n, const SymPoly& p, unsigned guard = kReynoldsGuard);

/// True iff p is fixed by the induced action. Checked on the two
/// generators (a transposition and an n-cycle), which generate the group,
/// so no n! scan is needed.
bool is_invariant(unsigned n, const SymPoly& p);

/// Dimension of the degree-i component of the squarefree invariant
/// algebra, by a class-summed average of subset counts: per class, a 0/1
/// knapsack over the actual cycle lengths of the induced representative.
mpz_class component_dimension(unsigned n, unsigned i);

/// All component dimensions for i = 0..n(n-1)/2.
std::vector<mpz_class> graded_dimensions(unsigned n);

/// Edge subset as a bitmask over slots (bit s = slot s present).
using EdgeMask = std::uint32_t;

EdgeMask apply_mask_perm(EdgeMask mask, const PairPermutation& alpha);

/// Minimal mask of every orbit of the induced action on edge subsets,
/// ascending. Found by an ascending sweep with breadth-first orbit
/// filling from the group generators, so each representative is the
/// smallest mask of its orbit.
std::vector<EdgeMask> orbit_representatives(unsigned n, unsigned guard = kOrbitGuard);

struct CheckLine {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct N4GeneratorsReport {
    std::vector<CheckLine> lines;
    bool all_ok() const;
};

/// Recompute the worked example on 4 nodes: the nine averaged generators
/// of the full slot-polynomial invariants, their explicit expansions,
/// the gamma reduction onto the four generators of the squarefree
/// invariants, and the graded dimensions [1,1,2,3,2,1,1].
N4GeneratorsReport reproduce_n4_generators();

} // namespace graphcount
