#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace opn {

/// Runs body(i) for i in [0, count) on up to `workers` threads. Cells are
/// independent; callers write into slot i so the merged result does not
/// depend on scheduling. The first exception thrown is rethrown.
template <typename Body>
void parallel_for(std::size_t count, unsigned workers, Body&& body) {
    workers = std::max(1u, workers);
    if (workers == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        const unsigned n = static_cast<unsigned>(std::min<std::size_t>(workers, count));
        for (unsigned w = 0; w < n; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    try {
                        body(i);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                        next = count;
                    }
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace opn
