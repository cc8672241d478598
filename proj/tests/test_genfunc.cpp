#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "graphcount/errors.hpp"
#include "graphcount/genfunc.hpp"
#include "graphcount/perm.hpp"
#include "graphcount/poly.hpp"

using namespace graphcount;

namespace {

std::vector<mpz_class> mz(std::initializer_list<long> values) {
    return std::vector<mpz_class>(values.begin(), values.end());
}

Permutation random_perm(std::mt19937& rng, unsigned n) {
    std::vector<unsigned> v(n);
    std::iota(v.begin(), v.end(), 0u);
    std::shuffle(v.begin(), v.end(), rng);
    return Permutation(std::move(v));
}

} // namespace

TEST_SUITE("genfunc") {

TEST_CASE("small simple-graph counts, all routes") {
    const std::vector<std::vector<mpz_class>> expected = {
        mz({1}),
        mz({1, 1}),
        mz({1, 1, 1, 1}),
        mz({1, 1, 2, 3, 2, 1, 1}),
    };
    for (unsigned n = 1; n <= 4; ++n) {
        CAPTURE(n);
        CHECK(simple_genfunc_det(n).counts == expected[n - 1]);
        CHECK(simple_genfunc_harary(n).counts == expected[n - 1]);
        CHECK(simple_genfunc_element(n).counts == expected[n - 1]);
    }
    CHECK(simple_genfunc_det(5).counts == mz({1, 1, 2, 4, 6, 6, 6, 4, 2, 1, 1}));
    CHECK(simple_genfunc_det(6).counts ==
          mz({1, 1, 2, 5, 9, 15, 21, 24, 24, 21, 15, 9, 5, 2, 1, 1}));
}

TEST_CASE("route agreement and complement symmetry") {
    const std::vector<long> totals = {1, 2, 4, 11, 34, 156, 1044};
    for (unsigned n = 1; n <= 7; ++n) {
        CAPTURE(n);
        GraphCountVector det = simple_genfunc_det(n);
        CHECK(det.counts == simple_genfunc_harary(n).counts);
        CHECK(det.counts == simple_genfunc_element(n).counts);
        CHECK(det.counts.size() == pair_count(n) + 1);
        CHECK(det.total() == totals[n - 1]);
        unsigned m = pair_count(n);
        for (unsigned i = 0; i <= m; ++i) {
            CHECK(det.counts[i] == det.counts[m - i]); // complementation
        }
    }
}

TEST_CASE("count vector validation") {
    CHECK_THROWS_AS(GraphCountVector(3, mz({1, 1})), std::invalid_argument);
    CHECK_THROWS_AS(GraphCountVector(2, mz({2, 1})), ConsistencyError);
    CHECK_THROWS_AS(GraphCountVector(2, mz({1, -1})), ConsistencyError);
    GraphCountVector ok(2, mz({1, 1}));
    CHECK(ok.poly().coeffs() == mz({1, 1}));
    CHECK(ok.total() == 2);

    CHECK_THROWS_AS(MultigraphSeriesVector(2, 3, mz({1, 1})), std::invalid_argument);
    CHECK_THROWS_AS(MultigraphSeriesVector(2, 1, mz({0, 1})), ConsistencyError);
    CHECK_THROWS_AS(MultigraphSeriesVector(2, 1, mz({1, -2})), ConsistencyError);
}

TEST_CASE("multigraph series examples") {
    // One slot on two nodes: exactly one multigraph per edge count.
    CHECK(multigraph_series(2, 6).counts == mz({1, 1, 1, 1, 1, 1, 1}));
    CHECK(multigraph_series(3, 2).counts == mz({1, 1, 2}));
    // Multisets of edges on a triangle: partitions of k into at most 3 parts.
    CHECK(multigraph_series(3, 8).counts == mz({1, 1, 2, 3, 4, 5, 7, 8, 10}));
    CHECK(multigraph_series(4, 6).counts == mz({1, 1, 3, 6, 11, 18, 32}));
    // No slots at all: only the empty multigraph, at every degree.
    CHECK(multigraph_series(1, 4).counts == mz({1, 0, 0, 0, 0}));

    for (unsigned n = 2; n <= 6; ++n) {
        CAPTURE(n);
        MultigraphSeriesVector def = multigraph_series(n);
        CHECK(def.max_degree == pair_count(n));
        CHECK(def.counts == multigraph_series(n, pair_count(n)).counts);
    }
}

TEST_CASE("multigraphs dominate simple graphs") {
    for (unsigned n = 2; n <= 6; ++n) {
        CAPTURE(n);
        GraphCountVector simple = simple_genfunc_det(n);
        MultigraphSeriesVector multi = multigraph_series(n);
        for (unsigned i = 0; i <= pair_count(n); ++i) {
            CHECK(multi.counts[i] >= simple.counts[i]);
            if (i > 0) CHECK(multi.counts[i] >= multi.counts[i - 1]);
        }
    }
}

TEST_CASE("fixed subset counts") {
    // Identity element: every subset is fixed.
    CycleType id6 = CycleType::from_parts(6, {1, 1, 1, 1, 1, 1});
    for (unsigned i = 0; i <= 6; ++i) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), 6, i);
        CHECK(fixed_subset_count(id6, i) == b);
    }
    // Two fixed slots and two 2-cycles: a fixed 2-subset is either both
    // fixed slots or one whole 2-cycle.
    CycleType dt = CycleType::from_parts(6, {2, 2, 1, 1});
    CHECK(fixed_subset_count(dt, 0) == 1);
    CHECK(fixed_subset_count(dt, 1) == 2);
    CHECK(fixed_subset_count(dt, 2) == 3);
    CHECK(fixed_subset_count(dt, 7) == 0);
    CHECK(trace_genfunc_of_element(dt).coeffs() == mz({1, 2, 3, 4, 3, 2, 1}));
}

TEST_CASE("subset counts match the product expansion on random elements") {
    // The binomial recursion and the polynomial product are independent
    // computations of the same per-element series; they must agree.
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 200; ++trial) {
        unsigned n = 2 + static_cast<unsigned>(trial % 7);
        EdgeIndexing idx(n);
        Permutation sigma = random_perm(rng, n);
        CycleType pt = cycle_type(induce_pair_perm(sigma, idx).slots());
        CAPTURE(n);
        CHECK(trace_genfunc_of_element(pt) == cycle_factor_product(pt, 1, 1));
    }
}

TEST_CASE("pair group cycle index") {
    CycleIndex z2 = pair_group_cycle_index(2);
    REQUIRE(z2.terms().size() == 1);
    CHECK(z2.terms()[0].coeff == 1);
    CHECK(z2.terms()[0].exponents.counts() == std::vector<unsigned>{1});

    CycleIndex z3 = pair_group_cycle_index(3);
    REQUIRE(z3.terms().size() == 3);
    CHECK(z3.terms()[0].coeff == mpq_class(1, 6));
    CHECK(z3.terms()[0].exponents.counts() == std::vector<unsigned>{3, 0, 0});
    CHECK(z3.terms()[1].coeff == mpq_class(1, 2));
    CHECK(z3.terms()[1].exponents.counts() == std::vector<unsigned>{1, 1, 0});
    CHECK(z3.terms()[2].coeff == mpq_class(1, 3));
    CHECK(z3.terms()[2].exponents.counts() == std::vector<unsigned>{0, 0, 1});

    CycleIndex z4 = pair_group_cycle_index(4);
    REQUIRE(z4.terms().size() == 4);
    CHECK(z4.terms()[0].coeff == mpq_class(1, 24));
    CHECK(z4.terms()[1].coeff == mpq_class(3, 8));
    CHECK(z4.terms()[1].exponents.counts() ==
          std::vector<unsigned>{2, 2, 0, 0, 0, 0});
    CHECK(z4.terms()[2].coeff == mpq_class(1, 4));
    CHECK(z4.terms()[2].exponents.counts() ==
          std::vector<unsigned>{0, 1, 0, 1, 0, 0});
    CHECK(z4.terms()[3].coeff == mpq_class(1, 3));
    CHECK(z4.terms()[3].exponents.counts() ==
          std::vector<unsigned>{0, 0, 2, 0, 0, 0});

    for (unsigned n = 2; n <= 8; ++n) {
        CAPTURE(n);
        CHECK(pair_group_cycle_index(n).coefficient_sum() == 1);
    }

    IntPoly sub = scale_and_assert_integer(z3.substitute_one_plus_power(),
                                           "cycle index substitution");
    CHECK(sub == simple_genfunc_det(3).poly());
}

TEST_CASE("cycle index term merging") {
    CycleType e = CycleType::from_parts(2, {1, 1});
    CycleIndex zi(2);
    zi.add_term(mpq_class(1, 2), e);
    zi.add_term(mpq_class(1, 3), e);
    REQUIRE(zi.terms().size() == 1);
    CHECK(zi.terms()[0].coeff == mpq_class(5, 6));
    zi.add_term(mpq_class(-5, 6), e);
    CHECK(zi.terms().empty()); // exact cancellation removes the term
    CHECK(zi.coefficient_sum() == 0);
}

TEST_CASE("element route guard") {
    CHECK_THROWS_AS(simple_genfunc_element(9), GuardError);
    CHECK_THROWS_AS(simple_genfunc_element(5, 4), GuardError);
    CHECK(simple_genfunc_element(5, 5).counts == simple_genfunc_det(5).counts);
}

TEST_CASE("thread count does not change results") {
    GraphCountVector serial = simple_genfunc_det(8, 1);
    CHECK(simple_genfunc_det(8, 3).counts == serial.counts);
    CHECK(simple_genfunc_det(8).counts == serial.counts);

    MultigraphSeriesVector mserial = multigraph_series(6, 20, 1);
    CHECK(multigraph_series(6, 20, 3).counts == mserial.counts);
}

} // TEST_SUITE
