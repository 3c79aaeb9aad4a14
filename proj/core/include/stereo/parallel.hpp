#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace stereo {

/// Number of worker threads to use. Controlled by the STEREO_THREADS
/// environment variable; 0 or unset means hardware concurrency.
int thread_budget();

/// Runs fn(begin, end) over contiguous chunks of [0, count). Chunks are
/// disjoint, so results are identical for any thread count or schedule.
template <typename F>
void parallel_chunks(int count, F&& fn) {
    if (count <= 0) return;
    const int workers = std::min(thread_budget(), count);
    if (workers <= 1) {
        fn(0, count);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const int chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const int begin = w * chunk;
        const int end = std::min(count, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace stereo
