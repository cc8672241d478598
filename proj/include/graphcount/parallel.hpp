#pragma once

// Parallel map with an ordered reduction. Workers fill an indexed result
// vector; the reduction then runs single-threaded in index order, so with
// exact arithmetic the result is identical under any schedule (and equal
// to the serial result).

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace graphcount {

/// Apply `map(i)` for i in [0, count) across up to `threads` workers, then
/// fold the results in index order with `reduce(acc, result_i)`.
/// `threads == 0` picks the hardware concurrency.
template <typename Result, typename Map, typename Reduce>
void map_reduce_ordered(size_t count, Map&& map, Result& acc, Reduce&& reduce,
                        unsigned threads = 0) {
    if (count == 0) return;
    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    if (threads > count) threads = static_cast<unsigned>(count);

    std::vector<Result> results(count);
    if (threads == 1) {
        for (size_t i = 0; i < count; ++i) results[i] = map(i);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                results[i] = map(i);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (size_t i = 0; i < count; ++i) reduce(acc, results[i]);
}

} // namespace graphcount
