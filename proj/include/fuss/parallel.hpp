#pragma once

/**
 * @file parallel.hpp
 * @brief Trial-level worker pool with order-independent results.
 *
 * Thread count comes from FUSS_SPECTRA_THREADS (default 1). Results land in
 * a pre-sized vector at their trial index and any reduction happens after
 * the join, so output is identical for every thread count.
 */

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace fuss {

inline unsigned thread_count() {
    const char* env = std::getenv("FUSS_SPECTRA_THREADS");
    if (!env || !*env) return 1;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || v < 1) return 1;
    return static_cast<unsigned>(v);
}

template <typename F>
auto parallel_map_trials(unsigned trials, F&& fn) {
    using R = decltype(fn(0u));
    std::vector<R> results(trials);
    unsigned workers = std::min(thread_count(), trials ? trials : 1u);
    if (workers <= 1) {
        for (unsigned t = 0; t < trials; ++t) results[t] = fn(t);
        return results;
    }
    std::atomic<unsigned> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (unsigned t = next.fetch_add(1); t < trials; t = next.fetch_add(1))
                results[t] = fn(t);
        });
    for (auto& th : pool) th.join();
    return results;
}

}  // namespace fuss
