#include <doctest.h>

#include <bit>
#include <random>
#include <set>
#include <vector>

#include "graphcount/errors.hpp"
#include "graphcount/genfunc.hpp"
#include "graphcount/invariants.hpp"
#include "graphcount/oracle.hpp"
#include "graphcount/perm.hpp"

using namespace graphcount;

namespace {

std::vector<mpz_class> mz(std::initializer_list<long> values) {
    return std::vector<mpz_class>(values.begin(), values.end());
}

} // namespace

TEST_SUITE("oracle") {

TEST_CASE("tabulated slot images") {
    auto tables = induced_slot_images(4);
    CHECK(tables.size() == 24);
    std::set<std::vector<unsigned>> distinct(tables.begin(), tables.end());
    CHECK(distinct.size() == 24); // the induced action is faithful for n >= 3
    // First element is the identity (lexicographic enumeration).
    CHECK(tables[0] == std::vector<unsigned>{0, 1, 2, 3, 4, 5});

    CHECK(apply_slot_images(0b000011u, tables[0]) == 0b000011u);
    for (const auto& images : tables) {
        EdgeMask moved = apply_slot_images(0b010110u, images);
        CHECK(std::popcount(moved) == 3); // relabeling preserves edge count
    }
}

TEST_CASE("canonical forms") {
    auto tables = induced_slot_images(4);
    std::mt19937 rng(5150);
    std::uniform_int_distribution<EdgeMask> masks(0, (1u << 6) - 1);
    for (int trial = 0; trial < 100; ++trial) {
        EdgeMask mask = masks(rng);
        EdgeMask canon = canonical_mask(mask, tables);
        CHECK(canon <= mask);
        CHECK(canonical_mask(canon, tables) == canon); // idempotent
        CHECK(std::popcount(canon) == std::popcount(mask));
        // Constant on the whole orbit.
        for (const auto& images : tables) {
            CHECK(canonical_mask(apply_slot_images(mask, images), tables) == canon);
        }
    }

    auto t3 = induced_slot_images(3);
    CHECK(canonical_weights({2, 0, 0}, t3) == WeightVector{0, 0, 2});
    CHECK(canonical_weights({1, 2, 1}, t3) == WeightVector{1, 1, 2});
    CHECK(canonical_weights({0, 0, 0}, t3) == WeightVector{0, 0, 0});
}

TEST_CASE("brute-force simple graph counts") {
    const std::vector<std::vector<mpz_class>> expected = {
        mz({1}),
        mz({1, 1}),
        mz({1, 1, 1, 1}),
        mz({1, 1, 2, 3, 2, 1, 1}),
        mz({1, 1, 2, 4, 6, 6, 6, 4, 2, 1, 1}),
        mz({1, 1, 2, 5, 9, 15, 21, 24, 24, 21, 15, 9, 5, 2, 1, 1}),
    };
    for (unsigned n = 1; n <= 6; ++n) {
        CAPTURE(n);
        CHECK(brute_simple_counts(n).counts == expected[n - 1]);
    }
    CHECK_THROWS_AS(brute_simple_counts(7), GuardError);
    CHECK_THROWS_AS(brute_simple_counts(6, 5), GuardError);
}

TEST_CASE("brute-force multigraph counts") {
    CHECK(brute_multigraph_counts(2, 8).counts ==
          mz({1, 1, 1, 1, 1, 1, 1, 1, 1}));
    // Partitions of k into at most 3 parts.
    CHECK(brute_multigraph_counts(3, 8).counts ==
          mz({1, 1, 2, 3, 4, 5, 7, 8, 10}));
    CHECK(brute_multigraph_counts(4, 6).counts == mz({1, 1, 3, 6, 11, 18, 32}));
    CHECK(brute_multigraph_counts(1, 3).counts == mz({1, 0, 0, 0}));

    CHECK_THROWS_AS(brute_multigraph_counts(6, 4), GuardError);
    CHECK_THROWS_AS(brute_multigraph_counts(4, 9), GuardError);
    CHECK(brute_multigraph_counts(4, 9, kBruteMultiGuard, 9).counts ==
          multigraph_series(4, 9).counts); // raised degree guard
}

TEST_CASE("class-summed subset counts match the polynomial route") {
    for (unsigned n = 1; n <= 8; ++n) {
        CAPTURE(n);
        GraphCountVector g = simple_genfunc_det(n);
        for (unsigned i = 0; i <= pair_count(n); ++i) {
            CHECK(burnside_subset_count(n, i) == g.counts[i]);
        }
        CHECK(burnside_subset_count(n, pair_count(n) + 1) == 0);
    }
}

} // TEST_SUITE
