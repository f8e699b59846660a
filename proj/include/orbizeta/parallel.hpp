#ifndef ORBIZETA_PARALLEL_HPP
#define ORBIZETA_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace orbizeta {

/// Sums fn(0) + ... + fn(chunks - 1) on a pool of worker threads.
///
/// Workers pull chunk indices from a shared counter and keep private partial
/// sums; the partials are added once at the end.  Integer addition is
/// associative, so the total does not depend on scheduling.  The first
/// exception thrown by any chunk is rethrown on the calling thread.
template <class Fn>
std::uint64_t chunked_sum(std::uint64_t chunks, unsigned threads, Fn&& fn)
{
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, chunks));
    if (threads <= 1) {
        std::uint64_t total = 0;
        for (std::uint64_t c = 0; c < chunks; ++c) total += fn(c);
        return total;
    }

    std::atomic<std::uint64_t> next{0};
    std::vector<std::uint64_t> partial(threads, 0);
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (std::uint64_t c = next++; c < chunks; c = next++) partial[t] += fn(c);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    next = chunks;
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
    std::uint64_t total = 0;
    for (auto s : partial) total += s;
    return total;
}

}  // namespace orbizeta

#endif
