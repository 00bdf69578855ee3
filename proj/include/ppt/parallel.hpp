#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace ppt {

// Runs fn(i) for i in [0, count) across the given number of workers.
// Callers write results into per-index slots, so output order never depends
// on the worker count.
template <class F>
void parallel_for(std::size_t count, int workers, F&& fn) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            fn(i);
        }
    };
    std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace ppt
