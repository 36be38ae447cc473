#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace lambdap {

/// Worker count: LAMBDAP_WORKERS env var, else 1 (single-threaded).
inline int worker_count() {
    if (const char* env = std::getenv("LAMBDAP_WORKERS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

/// Runs fn(i) for i in [0, n). Results must be written to pre-sized storage
/// indexed by i so the merge order is independent of the worker count.
inline void parallel_for(size_t n, const std::function<void(size_t)>& fn) {
    int workers = worker_count();
    if (workers <= 1 || n < 2) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    auto run = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= n) break;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    int spawn = std::min<int>(workers, static_cast<int>(n));
    pool.reserve(spawn);
    for (int w = 0; w < spawn - 1; ++w) pool.emplace_back(run);
    run();
    for (auto& th : pool) th.join();
}

}  // namespace lambdap
