#include "graphcount/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace graphcount {

mpz_class factorial(unsigned n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Permutation::Permutation(std::vector<unsigned> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (unsigned v : images_) {
        if (v >= images_.size() || seen[v]) {
            throw std::invalid_argument("not a permutation: images are not a bijection");
        }
        seen[v] = true;
    }
}

Permutation Permutation::identity(unsigned n) {
    std::vector<unsigned> v(n);
    std::iota(v.begin(), v.end(), 0u);
    return Permutation(std::move(v));
}

Permutation Permutation::from_cycles(unsigned n,
                                     const std::vector<std::vector<unsigned>>& cycles) {
    std::vector<unsigned> v(n);
    std::iota(v.begin(), v.end(), 0u);
    for (const auto& c : cycles) {
        for (size_t i = 0; i < c.size(); ++i) {
            unsigned from = c[i];
            unsigned to = c[(i + 1) % c.size()];
            if (from >= n || to >= n) {
                throw std::invalid_argument("cycle point out of range");
            }
            v[from] = to;
        }
    }
    return Permutation(std::move(v));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
    if (degree() != rhs.degree()) {
        throw std::invalid_argument("composing permutations of different degrees");
    }
    std::vector<unsigned> v(degree());
    for (unsigned i = 0; i < degree(); ++i) v[i] = images_[rhs.images_[i]];
    Permutation p;
    p.images_ = std::move(v); // composition of bijections, no recheck needed
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<unsigned> v(degree());
    for (unsigned i = 0; i < degree(); ++i) v[images_[i]] = i;
    Permutation p;
    p.images_ = std::move(v);
    return p;
}

bool Permutation::is_identity() const {
    for (unsigned i = 0; i < degree(); ++i) {
        if (images_[i] != i) return false;
    }
    return true;
}

std::vector<std::vector<unsigned>> Permutation::cycles() const {
    std::vector<std::vector<unsigned>> out;
    std::vector<bool> seen(degree(), false);
    for (unsigned start = 0; start < degree(); ++start) {
        if (seen[start]) continue;
        std::vector<unsigned> cyc;
        unsigned cur = start;
        do {
            seen[cur] = true;
            cyc.push_back(cur);
            cur = images_[cur];
        } while (cur != start);
        out.push_back(std::move(cyc));
    }
    return out;
}

CycleType::CycleType(unsigned degree, std::vector<unsigned> counts)
    : degree_(degree), counts_(std::move(counts)) {
    if (counts_.size() != degree_) {
        throw std::invalid_argument("cycle type needs one count per length 1..degree");
    }
    unsigned long long total = 0;
    for (unsigned k = 1; k <= degree_; ++k) {
        total += static_cast<unsigned long long>(k) * counts_[k - 1];
    }
    if (total != degree_) {
        throw std::invalid_argument("cycle lengths do not sum to the degree");
    }
}

CycleType CycleType::from_parts(unsigned degree, const std::vector<unsigned>& parts) {
    std::vector<unsigned> counts(degree, 0);
    for (unsigned p : parts) {
        if (p == 0 || p > degree) throw std::invalid_argument("part out of range");
        ++counts[p - 1];
    }
    return CycleType(degree, std::move(counts));
}

unsigned CycleType::count(unsigned k) const {
    if (k == 0 || k > degree_) return 0;
    return counts_[k - 1];
}

unsigned CycleType::total_cycles() const {
    unsigned t = 0;
    for (unsigned c : counts_) t += c;
    return t;
}

std::vector<unsigned> CycleType::parts() const {
    std::vector<unsigned> out;
    for (unsigned k = degree_; k >= 1; --k) {
        for (unsigned r = 0; r < counts_[k - 1]; ++r) out.push_back(k);
    }
    return out;
}

CycleType cycle_type(const Permutation& p) {
    std::vector<unsigned> counts(p.degree(), 0);
    for (const auto& c : p.cycles()) ++counts[c.size() - 1];
    return CycleType(p.degree(), std::move(counts));
}

EdgeIndexing::EdgeIndexing(unsigned n) : n_(n), m_(pair_count(n)) {
    pair_of_.reserve(m_);
    slot_table_.assign(static_cast<size_t>(n_) * n_, m_);
    unsigned slot = 0;
    for (unsigned i = 0; i < n_; ++i) {
        for (unsigned j = i + 1; j < n_; ++j) {
            pair_of_.emplace_back(i, j);
            slot_table_[static_cast<size_t>(i) * n_ + j] = slot;
            ++slot;
        }
    }
}

unsigned EdgeIndexing::slot_of(unsigned i, unsigned j) const {
    if (i == j || i >= n_ || j >= n_) throw std::invalid_argument("not an edge slot");
    if (i > j) std::swap(i, j);
    return slot_table_[static_cast<size_t>(i) * n_ + j];
}

PairPermutation::PairPermutation(unsigned vertex_count, Permutation slot_perm)
    : n_(vertex_count), slots_(std::move(slot_perm)) {
    if (slots_.degree() != pair_count(n_)) {
        throw std::invalid_argument("slot permutation degree is not n(n-1)/2");
    }
}

PairPermutation PairPermutation::operator*(const PairPermutation& rhs) const {
    if (n_ != rhs.n_) throw std::invalid_argument("mixing pair groups of different n");
    return PairPermutation(n_, slots_ * rhs.slots_);
}

namespace {

void partitions_rec(unsigned remaining, unsigned max_part, std::vector<unsigned>& parts,
                    std::vector<std::vector<unsigned>>& out) {
    if (remaining == 0) {
        out.push_back(parts);
        return;
    }
    for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
        parts.push_back(p);
        partitions_rec(remaining - p, p, parts, out);
        parts.pop_back();
    }
}

} // namespace

mpz_class conjugacy_class_size(const CycleType& lambda) {
    // n! / prod_k k^{j_k} j_k!
    mpz_class denom = 1;
    for (unsigned k = 1; k <= lambda.degree(); ++k) {
        unsigned jk = lambda.count(k);
        if (jk == 0) continue;
        mpz_class kp;
        mpz_ui_pow_ui(kp.get_mpz_t(), k, jk);
        denom *= kp * factorial(jk);
    }
    mpz_class size;
    mpz_divexact(size.get_mpz_t(), factorial(lambda.degree()).get_mpz_t(),
                 denom.get_mpz_t());
    return size;
}

std::vector<PartitionClass> enumerate_partition_classes(unsigned n) {
    std::vector<std::vector<unsigned>> parts_list;
    std::vector<unsigned> scratch;
    partitions_rec(n, n == 0 ? 1 : n, scratch, parts_list);
    std::vector<PartitionClass> out;
    out.reserve(parts_list.size());
    for (const auto& parts : parts_list) {
        CycleType ct = CycleType::from_parts(n, parts);
        mpz_class size = conjugacy_class_size(ct);
        out.push_back(PartitionClass{std::move(ct), std::move(size)});
    }
    return out;
}

std::vector<Permutation> all_permutations(unsigned n, unsigned guard) {
    std::vector<Permutation> out;
    for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); }, guard);
    return out;
}

PairPermutation induce_pair_perm(const Permutation& sigma, const EdgeIndexing& idx) {
    if (sigma.degree() != idx.vertex_count()) {
        throw std::invalid_argument("permutation degree does not match edge indexing");
    }
    std::vector<unsigned> images(idx.slot_count());
    for (unsigned slot = 0; slot < idx.slot_count(); ++slot) {
        auto [i, j] = idx.pair_of(slot);
        images[slot] = idx.slot_of(sigma(i), sigma(j));
    }
    return PairPermutation(idx.vertex_count(), Permutation(std::move(images)));
}

Permutation class_representative(const CycleType& lambda) {
    std::vector<std::vector<unsigned>> cycles;
    unsigned next = 0;
    for (unsigned len : lambda.parts()) {
        std::vector<unsigned> c(len);
        std::iota(c.begin(), c.end(), next);
        next += len;
        cycles.push_back(std::move(c));
    }
    return Permutation::from_cycles(lambda.degree(), cycles);
}

CycleType pair_cycle_type_of_class(const CycleType& lambda, const EdgeIndexing& idx) {
    return cycle_type(induce_pair_perm(class_representative(lambda), idx).slots());
}

} // namespace graphcount
