#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcubic::arith {

inline std::vector<std::uint32_t> primes_up_to(std::uint32_t n)
{
    std::vector<std::uint32_t> out;
    if (n < 2)
        return out;
    std::vector<bool> composite(n + 1, false);
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (composite[i])
            continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= n; j += i)
            composite[j] = true;
    }
    return out;
}

/// Bit-packed squarefree indicator on [1, N].
class SquarefreeTable {
public:
    static constexpr std::size_t default_budget_bytes = std::size_t{256} << 20;

    explicit SquarefreeTable(std::uint64_t n, std::size_t budget_bytes = default_budget_bytes)
        : n_(n)
    {
        if (n == 0)
            throw std::invalid_argument("SquarefreeTable: N must be >= 1");
        const std::uint64_t words = n / 64 + 1;
        if (words * 8 > budget_bytes)
            throw std::length_error("SquarefreeTable: N = " + std::to_string(n) +
                                    " exceeds memory budget of " +
                                    std::to_string(budget_bytes) + " bytes");
        bits_.assign(words, ~std::uint64_t{0});
        clear(0);

        std::uint64_t r = 1;
        while ((r + 1) * (r + 1) <= n)
            ++r;
        for (std::uint32_t p : primes_up_to(static_cast<std::uint32_t>(r))) {
            const std::uint64_t sq = std::uint64_t{p} * p;
            for (std::uint64_t m = sq; m <= n; m += sq)
                clear(m);
        }
    }

    std::uint64_t size() const { return n_; }

    bool operator[](std::uint64_t d) const
    {
        if (d == 0 || d > n_)
            throw std::out_of_range("SquarefreeTable: index out of range");
        return (bits_[d >> 6] >> (d & 63)) & 1;
    }

    /// Odd squarefree d in [lo, hi], ascending. Bounds are clipped to [1, N].
    std::vector<std::uint64_t> odd_in(std::uint64_t lo, std::uint64_t hi) const
    {
        std::vector<std::uint64_t> out;
        if (lo < 1)
            lo = 1;
        if (hi > n_)
            hi = n_;
        if ((lo & 1) == 0)
            ++lo;
        for (std::uint64_t d = lo; d <= hi; d += 2) {
            if ((bits_[d >> 6] >> (d & 63)) & 1)
                out.push_back(d);
        }
        return out;
    }

    std::uint64_t count_odd(std::uint64_t lo, std::uint64_t hi) const
    {
        return odd_in(lo, hi).size();
    }

    std::uint64_t count() const
    {
        std::uint64_t c = 0;
        for (auto w : bits_)
            c += static_cast<std::uint64_t>(__builtin_popcountll(w));
        // padding bits above N were never cleared
        for (std::uint64_t d = n_ + 1; d < bits_.size() * 64; ++d)
            c -= (bits_[d >> 6] >> (d & 63)) & 1;
        return c;
    }

private:
    void clear(std::uint64_t d) { bits_[d >> 6] &= ~(std::uint64_t{1} << (d & 63)); }

    std::uint64_t n_;
    std::vector<std::uint64_t> bits_;
};

} // namespace qcubic::arith
