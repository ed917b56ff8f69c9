#pragma once

#include <bit>
#include <cstdint>

namespace qcubic::arith {

/// Kronecker symbol (a|n), extended to n = 0, negative n and even n.
///
/// Binary Jacobi iteration: strips powers of two with the (2|n) rule and
/// flips by quadratic reciprocity. No factorization, O(log^2 n).
inline int kronecker(std::int64_t a, std::int64_t n)
{
    if (n == 0)
        return (a == 1 || a == -1) ? 1 : 0;

    int sign = 1;
    std::uint64_t un;
    if (n < 0) {
        un = static_cast<std::uint64_t>(-(n + 1)) + 1;
        if (a < 0)
            sign = -sign;
    } else {
        un = static_cast<std::uint64_t>(n);
    }

    if ((un & 1) == 0) {
        if ((a & 1) == 0)
            return 0;
        const int v = std::countr_zero(un);
        un >>= v;
        // (a|2) = (2|a) for odd a: -1 iff a = 3, 5 mod 8
        const std::uint64_t a8 = static_cast<std::uint64_t>(a) & 7;
        if ((v & 1) && (a8 == 3 || a8 == 5))
            sign = -sign;
    }

    // un is odd and positive; reduce a mod un into [0, un)
    std::uint64_t ua;
    if (a >= 0) {
        ua = static_cast<std::uint64_t>(a) % un;
    } else {
        const std::uint64_t m = (static_cast<std::uint64_t>(-(a + 1)) + 1) % un;
        ua = m == 0 ? 0 : un - m;
    }

    while (ua != 0) {
        const int v = std::countr_zero(ua);
        ua >>= v;
        const std::uint64_t n8 = un & 7;
        if ((v & 1) && (n8 == 3 || n8 == 5))
            sign = -sign;
        if ((ua & 3) == 3 && (un & 3) == 3)
            sign = -sign;
        const std::uint64_t tmp = un % ua;
        un = ua;
        ua = tmp;
    }
    return un == 1 ? sign : 0;
}

} // namespace qcubic::arith
