#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qcubic::arith {

struct PrimePower {
    std::uint64_t prime;
    int exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

using Factorization = std::vector<PrimePower>;

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1)
            r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

// Brent's variant of Pollard rho; n odd composite.
inline std::uint64_t pollard_brent(std::uint64_t n)
{
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
        std::uint64_t r = 1;
        const std::uint64_t m = 128;
        auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
        do {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i)
                y = f(y);
            std::uint64_t k = 0;
            do {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r <<= 1;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

} // namespace detail

/// Deterministic Miller-Rabin for all 64-bit n.
inline bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    static constexpr std::uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto p : small) {
        if (n % p == 0)
            return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (auto a : small) {
        std::uint64_t x = detail::powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = detail::mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

namespace detail {

inline void split_large(std::uint64_t n, std::vector<std::uint64_t>& out)
{
    if (n == 1)
        return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    const std::uint64_t d = pollard_brent(n);
    split_large(d, out);
    split_large(n / d, out);
}

} // namespace detail

/// Complete factorization, primes ascending. Trial division up to 10^6,
/// then Miller-Rabin and Pollard rho on the cofactor.
inline Factorization factorize(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("factorize: n must be positive");
    if (n > static_cast<std::uint64_t>(INT64_MAX))
        throw std::invalid_argument("factorize: n exceeds 2^63 - 1");

    Factorization out;
    auto take = [&](std::uint64_t p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e)
            out.push_back({p, e});
    };
    take(2);
    take(3);
    constexpr std::uint64_t trial_limit = 1'000'000;
    for (std::uint64_t p = 5; p <= trial_limit && p * p <= n; p += 6) {
        take(p);
        take(p + 2);
    }
    if (n > 1) {
        std::vector<std::uint64_t> rest;
        detail::split_large(n, rest);
        std::sort(rest.begin(), rest.end());
        for (std::size_t i = 0; i < rest.size();) {
            std::size_t j = i;
            while (j < rest.size() && rest[j] == rest[i])
                ++j;
            out.push_back({rest[i], static_cast<int>(j - i)});
            i = j;
        }
    }
    return out;
}

inline int mobius(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("mobius: n must be positive");
    int mu = 1;
    for (const auto& [p, e] : factorize(n)) {
        if (e > 1)
            return 0;
        mu = -mu;
    }
    return mu;
}

/// Number of distinct prime factors.
inline int omega(std::uint64_t n)
{
    return static_cast<int>(factorize(n).size());
}

inline bool is_squarefree(std::uint64_t n)
{
    for (const auto& pe : factorize(n)) {
        if (pe.exponent > 1)
            return false;
    }
    return true;
}

/// n = core * root^2 with core squarefree.
struct SquareDecomposition {
    std::uint64_t core;
    std::uint64_t root;
};

inline SquareDecomposition square_decompose(std::uint64_t n)
{
    SquareDecomposition r{1, 1};
    for (const auto& [p, e] : factorize(n)) {
        for (int i = 0; i < e / 2; ++i)
            r.root *= p;
        if (e & 1)
            r.core *= p;
    }
    return r;
}

} // namespace qcubic::arith
