#pragma once

// Fixed-size chunks handed to worker threads; results come back indexed by
// chunk so the merge order never depends on the number of workers.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace flocks {

template <typename Result, typename Fn>
std::vector<Result> run_chunks(std::size_t chunks, unsigned jobs, Fn && fn)
{
    std::vector<Result> out(chunks);
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t c; (c = next++) < chunks;) {
            try {
                out[c] = fn(c);
            }
            catch (...) {
                std::lock_guard lock(error_mutex);
                if (! error)
                    error = std::current_exception();
            }
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(chunks, 1))));
    if (n == 1)
        worker();
    else {
        std::vector<std::thread> threads;
        for (unsigned i = 0; i < n; ++i)
            threads.emplace_back(worker);
        for (auto & t : threads)
            t.join();
    }
    if (error)
        std::rethrow_exception(error);
    return out;
}

} // namespace flocks
