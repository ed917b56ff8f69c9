#pragma once

// Naive reference implementations used only to cross-check the fast kernels.

#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

inline std::vector<std::pair<std::uint64_t, int>> trial_factor(std::uint64_t n)
{
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e)
            out.emplace_back(p, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

inline int trial_mobius(std::uint64_t n)
{
    int mu = 1;
    for (auto [p, e] : trial_factor(n)) {
        if (e > 1)
            return 0;
        mu = -mu;
    }
    return mu;
}

inline std::uint64_t powmod_small(std::uint64_t b, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1;
    b %= m;
    while (e) {
        if (e & 1)
            r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

// Legendre symbol by enumerating squares mod an odd prime p.
inline int legendre_by_squares(std::int64_t a, std::uint64_t p)
{
    const std::uint64_t r = static_cast<std::uint64_t>(((a % static_cast<std::int64_t>(p)) +
                                                        static_cast<std::int64_t>(p)) %
                                                       static_cast<std::int64_t>(p));
    if (r == 0)
        return 0;
    for (std::uint64_t x = 1; x < p; ++x) {
        if (x * x % p == r)
            return 1;
    }
    return -1;
}

// Kronecker symbol by factoring n and multiplying Legendre symbols.
inline int kronecker_by_factoring(std::int64_t a, std::int64_t n)
{
    if (n == 0)
        return (a == 1 || a == -1) ? 1 : 0;
    int s = 1;
    if (n < 0) {
        n = -n;
        if (a < 0)
            s = -1;
    }
    for (auto [p, e] : trial_factor(static_cast<std::uint64_t>(n))) {
        int v;
        if (p == 2) {
            if (a % 2 == 0)
                v = 0;
            else {
                const std::int64_t a8 = ((a % 8) + 8) % 8;
                v = (a8 == 1 || a8 == 7) ? 1 : -1;
            }
        } else {
            v = legendre_by_squares(a, p);
        }
        for (int i = 0; i < e; ++i)
            s *= v;
    }
    return s;
}

} // namespace oracle
