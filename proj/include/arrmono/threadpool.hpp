#ifndef ARRMONO_THREADPOOL_HPP
#define ARRMONO_THREADPOOL_HPP

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace arrmono {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(i) for i in [0,n) on up to `threads` workers. Work items are
/// claimed from a shared counter; callers must make items independent so
/// the result is identical for any thread count.
inline void parallel_for(int64_t n, int threads, const std::function<void(int64_t)>& fn) {
    threads = resolve_threads(threads);
    if (threads <= 1 || n < 2) {
        for (int64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int64_t> next(0);
    auto worker = [&]() {
        for (;;) {
            int64_t i = next.fetch_add(1);
            if (i >= n) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    int nw = static_cast<int>(std::min<int64_t>(threads, n));
    pool.reserve(static_cast<size_t>(nw));
    for (int w = 0; w < nw; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

}  // namespace arrmono

#endif
