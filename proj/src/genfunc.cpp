#include "graphcount/genfunc.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "graphcount/errors.hpp"
#include "graphcount/parallel.hpp"

namespace graphcount {

GraphCountVector::GraphCountVector(unsigned n_, std::vector<mpz_class> counts_)
    : n(n_), counts(std::move(counts_)) {
    if (counts.size() != pair_count(n) + 1) {
        throw std::invalid_argument("graph count vector needs n(n-1)/2 + 1 entries");
    }
    for (const auto& c : counts) {
        if (c < 0) throw ConsistencyError("negative graph count");
    }
    if (counts.front() != 1) {
        throw ConsistencyError("edgeless graph count is not 1");
    }
}

IntPoly GraphCountVector::poly() const { return IntPoly(counts); }

mpz_class GraphCountVector::total() const {
    mpz_class t = 0;
    for (const auto& c : counts) t += c;
    return t;
}

MultigraphSeriesVector::MultigraphSeriesVector(unsigned n_, unsigned max_degree_,
                                               std::vector<mpz_class> counts_)
    : n(n_), max_degree(max_degree_), counts(std::move(counts_)) {
    if (counts.size() != static_cast<size_t>(max_degree) + 1) {
        throw std::invalid_argument("multigraph series needs max_degree + 1 entries");
    }
    for (const auto& c : counts) {
        if (c < 0) throw ConsistencyError("negative multigraph count");
    }
    if (counts.front() != 1) {
        throw ConsistencyError("edgeless multigraph count is not 1");
    }
}

void CycleIndex::add_term(const mpq_class& coeff, const CycleType& exponents) {
    if (exponents.degree() != degree_) {
        throw std::invalid_argument("cycle index term has the wrong degree");
    }
    auto pos = std::lower_bound(
        terms_.begin(), terms_.end(), exponents,
        [](const CycleIndexTerm& t, const CycleType& e) {
            return t.exponents.counts() > e.counts();
        });
    if (pos != terms_.end() && pos->exponents == exponents) {
        pos->coeff += coeff;
        if (pos->coeff == 0) terms_.erase(pos);
        return;
    }
    terms_.insert(pos, CycleIndexTerm{coeff, exponents});
}

RatPoly CycleIndex::substitute_one_plus_power() const {
    RatPoly acc;
    for (const auto& t : terms_) {
        acc.add_scaled(t.coeff, RatPoly::from_int(cycle_factor_product(t.exponents, 1, 1)));
    }
    return acc;
}

mpq_class CycleIndex::coefficient_sum() const {
    mpq_class s = 0;
    for (const auto& t : terms_) s += t.coeff;
    return s;
}

CycleIndex pair_group_cycle_index(unsigned n) {
    EdgeIndexing idx(n);
    mpz_class order = factorial(n);
    CycleIndex zi(pair_count(n));
    for (const auto& cls : enumerate_partition_classes(n)) {
        mpq_class coeff(cls.class_size, order);
        coeff.canonicalize();
        zi.add_term(coeff, pair_cycle_type_of_class(cls.cycle_type, idx));
    }
    return zi;
}

namespace {

// dp over cycle lengths: choosing t whole cycles of length k contributes
// C(j_k, t) ways and k*t slots.
std::vector<mpz_class> fixed_subset_profile(const CycleType& pair_type) {
    size_t m = pair_type.degree();
    std::vector<mpz_class> dp(m + 1);
    dp[0] = 1;
    for (unsigned k = 1; k <= pair_type.degree(); ++k) {
        unsigned jk = pair_type.count(k);
        if (jk == 0) continue;
        std::vector<mpz_class> next(m + 1);
        for (size_t s = 0; s <= m; ++s) {
            if (dp[s] == 0) continue;
            for (unsigned t = 0; t <= jk && s + static_cast<size_t>(k) * t <= m; ++t) {
                mpz_class b;
                mpz_bin_uiui(b.get_mpz_t(), jk, t);
                next[s + static_cast<size_t>(k) * t] += dp[s] * b;
            }
        }
        dp = std::move(next);
    }
    return dp;
}

std::vector<mpz_class> poly_to_counts(const IntPoly& g, unsigned n) {
    std::vector<mpz_class> counts(pair_count(n) + 1);
    if (g.degree() >= static_cast<int>(counts.size())) {
        throw ConsistencyError("graph counting polynomial exceeds degree n(n-1)/2");
    }
    for (size_t i = 0; i < counts.size(); ++i) counts[i] = g.coeff(i);
    return counts;
}

} // namespace

mpz_class fixed_subset_count(const CycleType& pair_type, unsigned i) {
    if (i > pair_type.degree()) return 0;
    return fixed_subset_profile(pair_type)[i];
}

IntPoly trace_genfunc_of_element(const CycleType& pair_type) {
    return IntPoly(fixed_subset_profile(pair_type));
}

GraphCountVector simple_genfunc_det(unsigned n, unsigned threads) {
    EdgeIndexing idx(n);
    auto classes = enumerate_partition_classes(n);
    IntPoly accum;
    map_reduce_ordered<IntPoly>(
        classes.size(),
        [&](size_t ci) {
            CycleType pt = pair_cycle_type_of_class(classes[ci].cycle_type, idx);
            IntPoly num = cycle_factor_product(pt, -1, 2); // det(1 - A z^2)
            IntPoly den = cycle_factor_product(pt, -1, 1); // det(1 - A z)
            return exact_quotient(num, den) * classes[ci].class_size;
        },
        accum, [](IntPoly& acc, const IntPoly& r) { acc = acc + r; }, threads);
    IntPoly g = scale_and_assert_integer(accum, factorial(n),
                                         "simple graph count, determinant route");
    return GraphCountVector(n, poly_to_counts(g, n));
}

GraphCountVector simple_genfunc_harary(unsigned n) {
    RatPoly p = pair_group_cycle_index(n).substitute_one_plus_power();
    IntPoly g = scale_and_assert_integer(p, "simple graph count, cycle index route");
    return GraphCountVector(n, poly_to_counts(g, n));
}

GraphCountVector simple_genfunc_element(unsigned n, unsigned guard) {
    if (n > guard) {
        throw GuardError("element-by-element route scans n! = " +
                         factorial(n).get_str() + " permutations; refusing n = " +
                         std::to_string(n) + " (guard n <= " + std::to_string(guard) +
                         "); use the class-summed routes, or raise the guard to force it");
    }
    EdgeIndexing idx(n);
    std::vector<mpz_class> accum(pair_count(n) + 1);
    for_each_permutation(
        n,
        [&](const Permutation& sigma) {
            CycleType pt = cycle_type(induce_pair_perm(sigma, idx).slots());
            auto profile = fixed_subset_profile(pt);
            for (size_t i = 0; i < accum.size(); ++i) accum[i] += profile[i];
        },
        std::max(guard, kPermEnumGuard));
    auto counts = scale_and_assert_integer(accum, factorial(n),
                                           "simple graph count, element route");
    return GraphCountVector(n, std::move(counts));
}

MultigraphSeriesVector multigraph_series(unsigned n, unsigned max_degree,
                                         unsigned threads) {
    EdgeIndexing idx(n);
    auto classes = enumerate_partition_classes(n);
    std::vector<mpz_class> accum(static_cast<size_t>(max_degree) + 1);
    map_reduce_ordered<std::vector<mpz_class>>(
        classes.size(),
        [&](size_t ci) {
            CycleType pt = pair_cycle_type_of_class(classes[ci].cycle_type, idx);
            std::vector<mpz_class> v = inverse_cycle_product(pt, max_degree).coeffs();
            for (auto& c : v) c *= classes[ci].class_size;
            return v;
        },
        accum,
        [](std::vector<mpz_class>& acc, const std::vector<mpz_class>& r) {
            for (size_t i = 0; i < acc.size(); ++i) acc[i] += r[i];
        },
        threads);
    auto counts = scale_and_assert_integer(accum, factorial(n), "multigraph count");
    return MultigraphSeriesVector(n, max_degree, std::move(counts));
}

MultigraphSeriesVector multigraph_series(unsigned n) {
    return multigraph_series(n, pair_count(n));
}

} // namespace graphcount
