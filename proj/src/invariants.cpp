#include "graphcount/invariants.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "graphcount/errors.hpp"

namespace graphcount {

Monomial gamma_monomial(const Monomial& mono) {
    Monomial out(mono.size());
    for (size_t s = 0; s < mono.size(); ++s) out[s] = mono[s] > 0 ? 1 : 0;
    return out;
}

Monomial permute_monomial(const Monomial& mono, const PairPermutation& alpha) {
    if (mono.size() != alpha.slot_count()) {
        throw std::invalid_argument("monomial length does not match the slot count");
    }
    Monomial out(mono.size());
    for (unsigned s = 0; s < mono.size(); ++s) out[alpha(s)] = mono[s];
    return out;
}

SymPoly SymPoly::monomial(Monomial mono, const mpq_class& coeff) {
    SymPoly p;
    p.add_term(coeff, mono);
    return p;
}

void SymPoly::add_term(const mpq_class& coeff, const Monomial& mono) {
    if (coeff == 0) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

SymPoly SymPoly::operator+(const SymPoly& rhs) const {
    SymPoly out = *this;
    for (const auto& [mono, coeff] : rhs.terms_) out.add_term(coeff, mono);
    return out;
}

SymPoly SymPoly::operator*(const mpq_class& scalar) const {
    SymPoly out;
    if (scalar == 0) return out;
    for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, coeff * scalar);
    return out;
}

SymPoly SymPoly::apply_perm(const PairPermutation& alpha) const {
    SymPoly out;
    for (const auto& [mono, coeff] : terms_) {
        out.add_term(coeff, permute_monomial(mono, alpha));
    }
    return out;
}

SymPoly SymPoly::gamma_image() const {
    SymPoly out;
    for (const auto& [mono, coeff] : terms_) out.add_term(coeff, gamma_monomial(mono));
    return out;
}

namespace {

std::string mono_to_string(const Monomial& mono) {
    std::string s;
    for (size_t i = 0; i < mono.size(); ++i) {
        if (mono[i] == 0) continue;
        if (!s.empty()) s += ' ';
        s += "x_" + std::to_string(i);
        if (mono[i] > 1) s += '^' + std::to_string(mono[i]);
    }
    return s.empty() ? "1" : s;
}

} // namespace

std::string SymPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [mono, coeff] : terms_) {
        if (!s.empty()) s += " + ";
        s += coeff.get_str() + " * " + mono_to_string(mono);
    }
    return s;
}

namespace {

void check_reynolds_guard(unsigned n, unsigned guard) {
    if (n > guard) {
        throw GuardError("group averaging scans n! = " + factorial(n).get_str() +
                         " permutations; refusing n = " + std::to_string(n) +
                         " (guard n <= " + std::to_string(guard) + ")");
    }
}

std::vector<PairPermutation> group_generators(unsigned n, const EdgeIndexing& idx) {
    std::vector<PairPermutation> gens;
    if (n >= 2) {
        gens.push_back(induce_pair_perm(Permutation::from_cycles(n, {{0, 1}}), idx));
        std::vector<unsigned> full(n);
        std::iota(full.begin(), full.end(), 0u);
        gens.push_back(induce_pair_perm(Permutation::from_cycles(n, {full}), idx));
    }
    return gens;
}

} // namespace

SymPoly reynolds_monomial(unsigned n, const Monomial& mono, unsigned guard) {
    check_reynolds_guard(n, guard);
    EdgeIndexing idx(n);
    if (mono.size() != idx.slot_count()) {
        throw std::invalid_argument("monomial length does not match the slot count");
    }
    std::map<Monomial, unsigned long> visits;
    for_each_permutation(
        n,
        [&](const Permutation& sigma) {
            ++visits[permute_monomial(mono, induce_pair_perm(sigma, idx))];
        },
        std::max(guard, kPermEnumGuard));
    mpz_class order = factorial(n);
    SymPoly out;
    for (const auto& [image, count] : visits) {
        mpq_class coeff(mpz_class(count), order);
        coeff.canonicalize();
        out.add_term(coeff, image);
    }
    return out;
}

SymPoly reynolds(unsigned n, const SymPoly& p, unsigned guard) {
    check_reynolds_guard(n, guard);
    EdgeIndexing idx(n);
    SymPoly sum;
    for_each_permutation(
        n,
        [&](const Permutation& sigma) {
            sum = sum + p.apply_perm(induce_pair_perm(sigma, idx));
        },
        std::max(guard, kPermEnumGuard));
    mpq_class inv_order(1, factorial(n));
    inv_order.canonicalize();
    return sum * inv_order;
}

bool is_invariant(unsigned n, const SymPoly& p) {
    EdgeIndexing idx(n);
    for (const auto& g : group_generators(n, idx)) {
        if (!(p.apply_perm(g) == p)) return false;
    }
    return true;
}

namespace {

// Subsets of whole cycles with total length s, one dp pass per class.
std::vector<mpz_class> cycle_knapsack(const std::vector<std::vector<unsigned>>& cycles,
                                      unsigned cap) {
    std::vector<mpz_class> dp(cap + 1);
    dp[0] = 1;
    for (const auto& c : cycles) {
        unsigned len = static_cast<unsigned>(c.size());
        for (unsigned s = cap; s >= len; --s) {
            dp[s] += dp[s - len];
            if (s == len) break;
        }
    }
    return dp;
}

mpz_class divide_by_order(const mpz_class& accum, unsigned n, const char* what) {
    mpz_class q, r;
    mpz_class order = factorial(n);
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), accum.get_mpz_t(), order.get_mpz_t());
    if (r != 0) throw ConsistencyError(std::string(what) + " is not an integer average");
    return q;
}

} // namespace

mpz_class component_dimension(unsigned n, unsigned i) {
    EdgeIndexing idx(n);
    if (i > idx.slot_count()) return 0;
    mpz_class accum = 0;
    for (const auto& cls : enumerate_partition_classes(n)) {
        auto rep = induce_pair_perm(class_representative(cls.cycle_type), idx);
        accum += cls.class_size * cycle_knapsack(rep.slots().cycles(), i)[i];
    }
    return divide_by_order(accum, n, "graded invariant dimension");
}

std::vector<mpz_class> graded_dimensions(unsigned n) {
    EdgeIndexing idx(n);
    unsigned m = idx.slot_count();
    std::vector<mpz_class> accum(m + 1);
    for (const auto& cls : enumerate_partition_classes(n)) {
        auto rep = induce_pair_perm(class_representative(cls.cycle_type), idx);
        auto dp = cycle_knapsack(rep.slots().cycles(), m);
        for (size_t i = 0; i <= m; ++i) accum[i] += cls.class_size * dp[i];
    }
    std::vector<mpz_class> dims(m + 1);
    for (size_t i = 0; i <= m; ++i) {
        dims[i] = divide_by_order(accum[i], n, "graded invariant dimension");
    }
    return dims;
}

EdgeMask apply_mask_perm(EdgeMask mask, const PairPermutation& alpha) {
    EdgeMask out = 0;
    for (unsigned s = 0; s < alpha.slot_count(); ++s) {
        if (mask & (EdgeMask(1) << s)) out |= EdgeMask(1) << alpha(s);
    }
    return out;
}

std::vector<EdgeMask> orbit_representatives(unsigned n, unsigned guard) {
    if (n > guard) {
        throw GuardError("orbit scan walks 2^(n(n-1)/2) edge masks; refusing n = " +
                         std::to_string(n) + " (guard n <= " + std::to_string(guard) + ")");
    }
    EdgeIndexing idx(n);
    auto gens = group_generators(n, idx);
    size_t total = size_t(1) << idx.slot_count();
    std::vector<bool> visited(total, false);
    std::vector<EdgeMask> reps;
    std::vector<EdgeMask> pending;
    // Ascending sweep: when a mask is unvisited, nothing smaller shares
    // its orbit, so it is the orbit minimum.
    for (size_t start = 0; start < total; ++start) {
        if (visited[start]) continue;
        reps.push_back(static_cast<EdgeMask>(start));
        visited[start] = true;
        pending.push_back(static_cast<EdgeMask>(start));
        while (!pending.empty()) {
            EdgeMask cur = pending.back();
            pending.pop_back();
            for (const auto& g : gens) {
                EdgeMask img = apply_mask_perm(cur, g);
                if (!visited[img]) {
                    visited[img] = true;
                    pending.push_back(img);
                }
            }
        }
    }
    return reps;
}

bool N4GeneratorsReport::all_ok() const {
    for (const auto& line : lines) {
        if (!line.ok) return false;
    }
    return true;
}

namespace {

SymPoly power_sum_over_slots(unsigned m, unsigned p, const mpq_class& coeff) {
    SymPoly out;
    for (unsigned s = 0; s < m; ++s) {
        Monomial mono(m, 0);
        mono[s] = p;
        out.add_term(coeff, mono);
    }
    return out;
}

Monomial make_mono(unsigned m, std::initializer_list<std::pair<unsigned, unsigned>> powers) {
    Monomial mono(m, 0);
    for (auto [slot, e] : powers) mono[slot] = e;
    return mono;
}

} // namespace

N4GeneratorsReport reproduce_n4_generators() {
    constexpr unsigned n = 4;
    constexpr unsigned m = 6;
    N4GeneratorsReport report;
    auto check = [&](std::string name, bool ok, std::string detail = "") {
        report.lines.push_back(CheckLine{std::move(name), ok, std::move(detail)});
    };

    // The three disjoint slot pairs (perfect matchings of 4 nodes).
    const std::vector<std::pair<unsigned, unsigned>> matchings = {{0, 5}, {1, 4}, {2, 3}};
    // The four slot triples sharing a node (stars).
    const std::vector<std::array<unsigned, 3>> stars = {
        {0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 4, 5}};
    // All ordered pairs of distinct slots sharing a node.
    const std::vector<std::pair<unsigned, unsigned>> adjacent_ordered = {
        {0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1},
        {0, 3}, {0, 4}, {3, 0}, {3, 4}, {4, 0}, {4, 3},
        {1, 3}, {1, 5}, {3, 1}, {3, 5}, {5, 1}, {5, 3},
        {2, 4}, {2, 5}, {4, 2}, {4, 5}, {5, 2}, {5, 4}};

    mpq_class sixth(1, 6), third(1, 3), quarter(1, 4), tf(1, 24);

    // Expected expansions of the nine generators of the full invariants.
    std::vector<std::pair<Monomial, SymPoly>> generators;
    for (unsigned p : {1u, 2u, 3u, 4u, 5u}) {
        generators.emplace_back(make_mono(m, {{0, p}}), power_sum_over_slots(m, p, sixth));
    }
    {
        SymPoly expect;
        for (auto [a, b] : matchings) expect.add_term(third, make_mono(m, {{a, 1}, {b, 1}}));
        generators.emplace_back(make_mono(m, {{0, 1}, {5, 1}}), expect);
    }
    for (unsigned p : {2u, 3u}) {
        SymPoly expect;
        for (auto [a, b] : adjacent_ordered) expect.add_term(tf, make_mono(m, {{a, p}, {b, 1}}));
        generators.emplace_back(make_mono(m, {{0, p}, {1, 1}}), expect);
    }
    {
        SymPoly expect;
        for (const auto& t : stars) {
            expect.add_term(quarter, make_mono(m, {{t[0], 1}, {t[1], 1}, {t[2], 1}}));
        }
        generators.emplace_back(make_mono(m, {{0, 1}, {1, 1}, {2, 1}}), expect);
    }

    std::vector<SymPoly> averaged;
    for (const auto& [mono, expect] : generators) {
        SymPoly got = reynolds_monomial(n, mono);
        averaged.push_back(got);
        check("R(" + mono_to_string(mono) + ") expansion", got == expect,
              got == expect ? std::to_string(got.term_count()) + " terms"
                            : "computed " + got.to_string());
    }

    SymPoly r_x0 = averaged[0];
    bool powers_collapse = true;
    for (size_t k = 1; k <= 4; ++k) {
        powers_collapse = powers_collapse && averaged[k].gamma_image() == r_x0;
    }
    check("gamma collapses every averaged power to R(x_0)", powers_collapse);

    SymPoly r_adj = reynolds_monomial(n, make_mono(m, {{0, 1}, {1, 1}}));
    check("gamma sends R(x_0^2 x_1) to R(x_0 x_1)",
          averaged[6].gamma_image() == r_adj);

    // The gamma images of the nine must be exactly the four generators of
    // the squarefree invariants: R(x_0), R(x_0 x_5), R(x_0 x_1), R(x_0 x_1 x_2).
    std::vector<SymPoly> expected_four = {r_x0, averaged[5], r_adj, averaged[8]};
    std::vector<SymPoly> images;
    for (const auto& g : averaged) {
        SymPoly img = g.gamma_image();
        if (std::find(images.begin(), images.end(), img) == images.end()) {
            images.push_back(img);
        }
    }
    bool four_ok = images.size() == 4;
    for (const auto& e : expected_four) {
        four_ok = four_ok && std::find(images.begin(), images.end(), e) != images.end();
    }
    check("gamma images reduce the nine generators to four invariants", four_ok,
          std::to_string(images.size()) + " distinct images");

    bool fixed_ok = true;
    for (const auto& e : expected_four) fixed_ok = fixed_ok && is_invariant(n, e);
    check("each reduced generator is fixed by the induced action", fixed_ok);

    const std::vector<mpz_class> expected_dims = {1, 1, 2, 3, 2, 1, 1};
    check("graded dimensions are 1,1,2,3,2,1,1", graded_dimensions(n) == expected_dims);

    std::vector<mpz_class> histogram(m + 1);
    for (EdgeMask rep : orbit_representatives(n)) {
        histogram[static_cast<unsigned>(std::popcount(rep))] += 1;
    }
    check("orbit scan finds the same distribution", histogram == expected_dims);

    return report;
}

} // namespace graphcount
