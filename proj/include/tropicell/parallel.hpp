#ifndef TROPICELL_PARALLEL_HPP
#define TROPICELL_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace tropicell {

/// 0 means "use the available hardware parallelism".
inline unsigned resolve_jobs(unsigned jobs)
{
    if (jobs > 0)
        return jobs;
    return std::max(1u, std::thread::hardware_concurrency());
}

/**
 * Run body(i) for i in [0, count) on up to `jobs` threads.  Work is handed
 * out in small chunks; the first exception thrown by any body is rethrown
 * after all workers have stopped.
 */
template <typename Body>
void parallel_for(std::size_t count, unsigned jobs, Body&& body)
{
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(resolve_jobs(jobs), count));
    if (workers <= 1)
    {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }

    constexpr std::size_t chunk = 16;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto work = [&] {
        while (!failed.load(std::memory_order_relaxed))
        {
            const std::size_t start = next.fetch_add(chunk);
            if (start >= count)
                return;
            const std::size_t stop = std::min(count, start + chunk);
            try
            {
                for (std::size_t i = start; i < stop; ++i)
                    body(i);
            }
            catch (...)
            {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                failed = true;
                return;
            }
        }
    };

    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back(work);
    pool.clear();
    if (error)
        std::rethrow_exception(error);
}

} // namespace tropicell

#endif
