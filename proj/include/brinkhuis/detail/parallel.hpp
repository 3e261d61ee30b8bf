// parallel.hpp -- static range partitioning over std::thread

#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace brinkhuis::detail {

inline unsigned resolve_workers(unsigned requested)
{
    if (requested != 0)
        return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

// Splits [0, count) into at most `workers` contiguous chunks and calls
// body(worker, begin, end) for each. Runs inline when one worker suffices.
// The first exception thrown by any worker is rethrown.
template <typename Body>
void parallel_for(std::size_t count, unsigned workers, Body&& body)
{
    workers = std::max(1u, workers);
    if (workers == 1 || count <= 1) {
        body(0u, std::size_t{0}, count);
        return;
    }
    const std::size_t chunks = std::min<std::size_t>(workers, count);
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(chunks);
    threads.reserve(chunks);
    for (std::size_t w = 0; w < chunks; ++w) {
        const std::size_t begin = count * w / chunks;
        const std::size_t end = count * (w + 1) / chunks;
        threads.emplace_back([&, w, begin, end] {
            try {
                body(static_cast<unsigned>(w), begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

} // namespace brinkhuis::detail
