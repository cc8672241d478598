#include "graphcount/oracle.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "graphcount/errors.hpp"

namespace graphcount {

std::vector<std::vector<unsigned>> induced_slot_images(unsigned n, unsigned guard) {
    EdgeIndexing idx(n);
    std::vector<std::vector<unsigned>> tables;
    for_each_permutation(
        n,
        [&](const Permutation& sigma) {
            tables.push_back(induce_pair_perm(sigma, idx).slots().images());
        },
        guard);
    return tables;
}

EdgeMask apply_slot_images(EdgeMask mask, const std::vector<unsigned>& images) {
    EdgeMask out = 0;
    for (unsigned s = 0; s < images.size(); ++s) {
        if (mask & (EdgeMask(1) << s)) out |= EdgeMask(1) << images[s];
    }
    return out;
}

EdgeMask canonical_mask(EdgeMask mask, const std::vector<std::vector<unsigned>>& tables) {
    EdgeMask best = mask;
    for (const auto& images : tables) {
        EdgeMask img = apply_slot_images(mask, images);
        if (img < best) best = img;
    }
    return best;
}

WeightVector canonical_weights(const WeightVector& weights,
                               const std::vector<std::vector<unsigned>>& tables) {
    WeightVector best = weights;
    WeightVector img(weights.size());
    for (const auto& images : tables) {
        for (unsigned s = 0; s < weights.size(); ++s) img[images[s]] = weights[s];
        if (img < best) best = img;
    }
    return best;
}

namespace {

unsigned count_cycles(const std::vector<unsigned>& images) {
    std::vector<bool> seen(images.size(), false);
    unsigned cycles = 0;
    for (unsigned start = 0; start < images.size(); ++start) {
        if (seen[start]) continue;
        ++cycles;
        for (unsigned cur = start; !seen[cur]; cur = images[cur]) seen[cur] = true;
    }
    return cycles;
}

} // namespace

GraphCountVector brute_simple_counts(unsigned n, unsigned guard) {
    if (n > guard) {
        throw GuardError("brute-force classification scans 2^(n(n-1)/2) masks against n! "
                         "images; refusing n = " + std::to_string(n) + " (guard n <= " +
                         std::to_string(guard) + ")");
    }
    EdgeIndexing idx(n);
    unsigned m = idx.slot_count();
    auto tables = induced_slot_images(n, std::max(guard, kPermEnumGuard));
    std::vector<mpz_class> counts(m + 1);
    const EdgeMask total = EdgeMask(1) << m;
    for (EdgeMask mask = 0; mask < total; ++mask) {
        if (canonical_mask(mask, tables) == mask) {
            counts[static_cast<unsigned>(std::popcount(mask))] += 1;
        }
    }
    // Orbit count must equal the average number of masks each element fixes;
    // an element fixes a mask iff the mask is a union of its slot cycles.
    mpz_class fixed_total = 0;
    for (const auto& images : tables) {
        mpz_class fixed;
        mpz_ui_pow_ui(fixed.get_mpz_t(), 2, count_cycles(images));
        fixed_total += fixed;
    }
    mpz_class orbits = 0;
    for (const auto& c : counts) orbits += c;
    if (fixed_total != orbits * factorial(n)) {
        throw ConsistencyError("canonical-form orbit count disagrees with the "
                               "fixed-point average");
    }
    return GraphCountVector(n, std::move(counts));
}

namespace {

struct MultigraphScan {
    const std::vector<std::vector<unsigned>>& tables;
    std::vector<mpz_class>& counts;
    std::vector<mpz_class>& fixed_sums;
    WeightVector weights;
    WeightVector image;

    void process() {
        unsigned total = 0;
        for (unsigned w : weights) total += w;
        bool minimal = true;
        unsigned long fixed_here = 0;
        for (const auto& images : tables) {
            for (unsigned s = 0; s < weights.size(); ++s) image[images[s]] = weights[s];
            if (image < weights) minimal = false;
            if (image == weights) ++fixed_here;
        }
        if (minimal) counts[total] += 1;
        fixed_sums[total] += fixed_here;
    }

    void fill(unsigned slot, unsigned budget) {
        if (slot == weights.size()) {
            process();
            return;
        }
        for (unsigned w = 0; w <= budget; ++w) {
            weights[slot] = w;
            fill(slot + 1, budget - w);
        }
        weights[slot] = 0;
    }
};

} // namespace

MultigraphSeriesVector brute_multigraph_counts(unsigned n, unsigned max_degree,
                                               unsigned guard, unsigned degree_guard) {
    if (n > guard || max_degree > degree_guard) {
        throw GuardError("brute-force multigraph scan refused: n = " + std::to_string(n) +
                         ", max degree " + std::to_string(max_degree) + " (guards n <= " +
                         std::to_string(guard) + ", degree <= " +
                         std::to_string(degree_guard) + ")");
    }
    EdgeIndexing idx(n);
    auto tables = induced_slot_images(n, std::max(guard, kPermEnumGuard));
    std::vector<mpz_class> counts(static_cast<size_t>(max_degree) + 1);
    std::vector<mpz_class> fixed_sums(counts.size());
    MultigraphScan scan{tables, counts, fixed_sums,
                        WeightVector(idx.slot_count(), 0),
                        WeightVector(idx.slot_count(), 0)};
    scan.fill(0, max_degree);
    mpz_class order = factorial(n);
    for (size_t k = 0; k < counts.size(); ++k) {
        if (fixed_sums[k] != counts[k] * order) {
            throw ConsistencyError("multigraph orbit count at degree " + std::to_string(k) +
                                   " disagrees with the fixed-vector average");
        }
    }
    return MultigraphSeriesVector(n, max_degree, std::move(counts));
}

mpz_class burnside_subset_count(unsigned n, unsigned i) {
    EdgeIndexing idx(n);
    mpz_class accum = 0;
    for (const auto& cls : enumerate_partition_classes(n)) {
        accum += cls.class_size *
                 fixed_subset_count(pair_cycle_type_of_class(cls.cycle_type, idx), i);
    }
    mpz_class q, r;
    mpz_class order = factorial(n);
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), accum.get_mpz_t(), order.get_mpz_t());
    if (r != 0) throw ConsistencyError("subset orbit average is not an integer");
    return q;
}

} // namespace graphcount
