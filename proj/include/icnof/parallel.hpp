#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace icnof {

/// Worker count used when the caller asks for 0 threads.
inline unsigned default_threads() noexcept {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1u : hw;
}

/**
 * Calls fn(k) for every k in [0, n), split into contiguous blocks over
 * `threads` workers. Results must be written to per-index slots so the
 * outcome does not depend on scheduling. The first exception is rethrown.
 */
template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
    if (threads == 0) threads = default_threads();
    const std::size_t workers = std::min<std::size_t>(threads, n);
    if (workers <= 1) {
        for (std::size_t k = 0; k < n; ++k) fn(k);
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = n * w / workers;
            const std::size_t end = n * (w + 1) / workers;
            pool.emplace_back([&, begin, end] {
                try {
                    for (std::size_t k = begin; k < end; ++k) fn(k);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace icnof
