#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace czekan {

/// Process-wide worker count used by parallel_for. 0 means hardware concurrency.
void set_thread_count(unsigned n);
unsigned thread_count();

/// Run fn(begin, end) over contiguous chunks of [0, n). Chunk boundaries depend
/// only on n and the worker count; callers must write to disjoint locations so
/// the result is identical for any worker count.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    unsigned workers = thread_count();
    if (workers == 0) workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    if (workers == 1 || n < 2 * workers) {
        fn(std::size_t{0}, n);
        return;
    }
    const std::size_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        if (begin >= n) break;
        const std::size_t end = begin + chunk < n ? begin + chunk : n;
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace czekan
