// Deterministic parallel-for: static index partition, results written to
// caller-indexed slots, so outputs are identical for any thread count.
#pragma once

#include <thread>
#include <vector>

namespace qnl {

template <class F>
void parallel_for(int n, int threads, F&& body) {
    if (threads <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    threads = std::min(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&body, t, threads, n] {
            for (int i = t; i < n; i += threads) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

int default_thread_count();

} // namespace qnl
