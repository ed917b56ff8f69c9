#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace qcubic::numeric {

/// Runs body(i) for i in [0, n) on up to `workers` threads. Each index is
/// written by exactly one worker into its own slot, so the combined result
/// depends only on n, not on scheduling.
template <class R, class F>
std::vector<R> parallel_map(std::size_t n, unsigned workers, F body)
{
    std::vector<R> out(n);
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i)
            out[i] = body(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i; (i = next.fetch_add(1)) < n;)
                    out[i] = body(i);
            } catch (...) {
                errors[w] = std::current_exception();
                next = n;
            }
        });
    }
    for (auto& t : pool)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

/// Contiguous [begin, end) blocks of [0, n) with the given count.
inline std::vector<std::pair<std::size_t, std::size_t>> split_blocks(std::size_t n, std::size_t blocks)
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    blocks = std::max<std::size_t>(1, std::min(blocks, std::max<std::size_t>(n, 1)));
    for (std::size_t b = 0; b < blocks; ++b)
        out.emplace_back(n * b / blocks, n * (b + 1) / blocks);
    return out;
}

inline unsigned hardware_workers()
{
    const unsigned h = std::thread::hardware_concurrency();
    return h == 0 ? 1 : h;
}

} // namespace qcubic::numeric
