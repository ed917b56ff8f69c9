#pragma once

// Independent expansions by plain integer/rational convolution.

#include <cstdint>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace oracle {

using Q = boost::multiprecision::mpq_rational;

template <class T>
std::vector<T> convolve(const std::vector<T>& a, const std::vector<T>& b, std::size_t n)
{
    std::vector<T> c(n, T(0));
    for (std::size_t i = 0; i < a.size() && i < n; ++i)
        for (std::size_t j = 0; j < b.size() && i + j < n; ++j)
            c[i + j] += a[i] * b[j];
    return c;
}

// (1-x)^5 (1+x) (1 + 4x + 11x^2 + 10x^3 - 11x^4 + 11x^6 - 4x^7 - x^8)
inline std::vector<std::int64_t> p_coefficients()
{
    std::vector<std::int64_t> r{1};
    for (int i = 0; i < 5; ++i)
        r = convolve<std::int64_t>(r, {1, -1}, r.size() + 1);
    r = convolve<std::int64_t>(r, {1, 1}, r.size() + 1);
    return convolve<std::int64_t>(r, {1, 4, 11, 10, -11, 0, 11, -4, -1}, r.size() + 8);
}

inline Q binom(long n, long k)
{
    Q r = 1;
    for (long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

// z(1+7z^2+7z^4+z^6) * sum_k C(k+6,6) z^(2k) * sum_j p^j z^(4j)
inline std::vector<Q> f_odd_series(long p, std::size_t n)
{
    std::vector<Q> a(n, Q(0)), b(n, Q(0)), c(n, Q(0));
    const long num[] = {0, 1, 0, 7, 0, 7, 0, 1};
    for (std::size_t i = 0; i < 8 && i < n; ++i)
        a[i] = num[i];
    for (std::size_t k = 0; 2 * k < n; ++k)
        b[2 * k] = binom(static_cast<long>(k) + 6, 6);
    Q pj = 1;
    for (std::size_t j = 0; 4 * j < n; ++j, pj *= p)
        c[4 * j] = pj;
    return convolve(convolve(a, b, n), c, n);
}

// numerator polynomial times 1/((1-z^2)^6 (1-p z^4)), without the scalar prefactor
inline std::vector<Q> f_even_minus_core_series(long p, std::size_t n)
{
    const Q a = Q(1, p), a2 = a * a;
    std::vector<Q> num(n, Q(0)), b(n, Q(0)), c(n, Q(0));
    const Q nc[] = {3 + a, 0, 10 - 17 * a + 3 * a2, 0, 3 - 17 * a + 10 * a2, 0, a + 3 * a2};
    for (std::size_t i = 0; i < 7 && i < n; ++i)
        num[i] = nc[i];
    for (std::size_t k = 0; 2 * k < n; ++k)
        b[2 * k] = binom(static_cast<long>(k) + 5, 5);
    Q pj = 1;
    for (std::size_t j = 0; 4 * j < n; ++j, pj *= p)
        c[4 * j] = pj;
    auto s = convolve(convolve(num, b, n), c, n);
    const Q s3 = (1 - a) * (1 - a) * (1 - a);
    for (auto& v : s)
        v /= s3;
    return s;
}

} // namespace oracle
