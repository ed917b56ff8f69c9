#pragma once

// L(1/2, chi) = q^(-1/2) sum_{a mod q} chi(a) zeta(1/2, a/q), with the
// Hurwitz zeta function by Euler-Maclaurin summation.

#include <cmath>
#include <cstdint>

namespace oracle {

inline long double hurwitz_zeta(long double s, long double a, int N = 30)
{
    // B_{2j}/(2j)!
    static const long double b[] = {1.0L / 6 / 2, -1.0L / 30 / 24, 1.0L / 42 / 720,
                                    -1.0L / 30 / 40320, 5.0L / 66 / 3628800,
                                    -691.0L / 2730 / 479001600.0L, 7.0L / 6 / 87178291200.0L};
    long double sum = 0;
    for (int k = 0; k < N; ++k)
        sum += std::pow(k + a, -s);
    const long double x = N + a;
    sum += std::pow(x, 1 - s) / (s - 1) + std::pow(x, -s) / 2;
    long double rising = s; // s (s+1) ... (s+2j-2)
    for (int j = 1; j <= 7; ++j) {
        sum += b[j - 1] * rising * std::pow(x, -s - 2 * j + 1);
        rising *= (s + 2 * j - 1) * (s + 2 * j);
    }
    return sum;
}

template <class Chi>
long double l_half_hurwitz(Chi chi, std::int64_t q)
{
    long double acc = 0;
    for (std::int64_t a = 1; a < q; ++a) {
        const int c = chi(a);
        if (c != 0)
            acc += c * hurwitz_zeta(0.5L, static_cast<long double>(a) / q);
    }
    return acc / std::sqrt(static_cast<long double>(q));
}

} // namespace oracle
