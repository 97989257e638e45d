#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace windlasso {

/**
 * Runs fn(i) for i in [0, count) on up to `workers` threads.
 *
 * Work items must be independent; callers get determinism by writing results
 * into preallocated slots indexed by i. The first exception (lowest worker
 * id) is rethrown after all threads join.
 */
inline void parallel_for(std::size_t count, int workers,
                         const std::function<void(std::size_t)>& fn) {
    if (workers < 1) workers = 1;
    if (workers == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
    std::vector<std::exception_ptr> errors(nthreads);
    std::vector<std::thread> threads;
    threads.reserve(nthreads);
    for (std::size_t w = 0; w < nthreads; ++w) {
        threads.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += nthreads) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (const auto& err : errors) {
        if (err) std::rethrow_exception(err);
    }
}

}  // namespace windlasso
