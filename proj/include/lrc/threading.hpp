#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace lrc {

// Number of workers to use when the caller passed 0 ("auto").
inline int resolve_workers(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(i) for i in [0, count) on `workers` threads. Work is claimed via a
// shared counter, so the i->thread assignment is nondeterministic; callers
// that need determinism must make fn(i) independent of the executing thread
// (e.g. derive per-i seeds) and merge results by index.
inline void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn) {
    workers = resolve_workers(workers);
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto run = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    int spawn = workers < static_cast<int>(count) ? workers : static_cast<int>(count);
    pool.reserve(static_cast<std::size_t>(spawn));
    for (int t = 1; t < spawn; ++t) pool.emplace_back(run);
    run();
    for (auto& th : pool) th.join();
}

}  // namespace lrc
