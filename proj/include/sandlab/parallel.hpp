#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sandlab {

// Worker count: SANDPILE_LAB_JOBS if set, else the requested value, else
// the hardware concurrency.
unsigned resolve_jobs(unsigned requested);

// Calls f(i) for i in [0, count) on up to `jobs` threads. Results are stored
// by index, so the output does not depend on scheduling.
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, unsigned jobs, F f) {
    std::vector<T> out(count);
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&]() {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                out[i] = f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    unsigned workers = std::min<std::size_t>(jobs, count);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return out;
}

}  // namespace sandlab
