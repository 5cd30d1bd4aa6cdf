#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace scenval {

/// Resolves a thread-count request: 0 means "use the hardware".
inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) {
        return requested;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1u : hw;
}

/// Runs fn(i) for i in [0, n) on up to `threads` workers in contiguous
/// blocks. Each index is visited exactly once; fn must only write to
/// per-index state, which keeps results identical for any thread count.
/// The first exception thrown by any worker is rethrown on the caller.
template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
    const unsigned t = resolve_threads(threads);
    if (t <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) {
            fn(i);
        }
        return;
    }
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(t, n));
    const std::size_t chunk = (n + workers - 1) / workers;

    std::mutex error_mutex;
    std::exception_ptr error;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t begin = static_cast<std::size_t>(w) * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) {
            break;
        }
        pool.emplace_back([begin, end, &fn, &error_mutex, &error] {
            try {
                for (std::size_t i = begin; i < end; ++i) {
                    fn(i);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

}  // namespace scenval
