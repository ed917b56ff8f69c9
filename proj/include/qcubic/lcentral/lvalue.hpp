#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qcubic/arith/factor.hpp"
#include "qcubic/arith/kronecker.hpp"
#include "qcubic/lcentral/kernel.hpp"
#include "qcubic/numeric/summation.hpp"

namespace qcubic::lcentral {

struct CentralValue {
    std::uint64_t d0 = 0;
    std::uint64_t q = 0;
    double value = 0;
    double est_error = 0;
    Scheme scheme = Scheme::kernelB;

    friend bool operator==(const CentralValue&, const CentralValue&) = default;
};

inline constexpr double accept_error = 1e-6;
inline constexpr double truncation_target = 1e-13;

inline void check_d0(std::uint64_t d0)
{
    if (d0 == 0 || (d0 & 1) == 0)
        throw std::invalid_argument("l_central: d0 = " + std::to_string(d0) + " must be odd and positive");
    if (!arith::is_squarefree(d0))
        throw std::invalid_argument("l_central: d0 = " + std::to_string(d0) + " is not squarefree");
}

/// 2 sum_{n > N} n^(-1/2) V(n a) <= 2 exp(-(N+1)^2 a^2) / (Gamma(1/4) a^(3/2) N)
inline double afe_tail_bound(std::uint64_t N, double a)
{
    const double m = static_cast<double>(N + 1) * a;
    return 2 * std::exp(-m * m - lgamma_quarter()) / (std::pow(a, 1.5) * static_cast<double>(N));
}

/// Smallest N with afe_tail_bound(N, a) below target.
inline std::uint64_t afe_length(double a, double target = truncation_target)
{
    std::uint64_t N = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::sqrt(20.0) / a));
    while (afe_tail_bound(N, a) >= target)
        N += 1 + N / 64;
    while (N > 1 && afe_tail_bound(N - 1, a) < target)
        --N;
    return N;
}

/// L(1/2, chi_{8 d0}) = 2 sum chi(n) n^(-1/2) V(n sqrt(pi/q)), q = 8 d0.
template <class Kernel>
CentralValue l_central_with(std::uint64_t d0, const Kernel& V, Scheme tag)
{
    check_d0(d0);
    const std::uint64_t q = 8 * d0;
    const double a = std::sqrt(std::numbers::pi / static_cast<double>(q));
    const std::uint64_t N = afe_length(a);
    const auto qd = static_cast<std::int64_t>(q);

    numeric::CompensatedSum<double> sum;
    double abs_sum = 0, weight = 0;
    for (std::uint64_t n = 1; n <= N; n += 2) {
        const int chi = arith::kronecker(qd, static_cast<std::int64_t>(n));
        if (chi == 0)
            continue;
        const double w = 1 / std::sqrt(static_cast<double>(n));
        const double term = w * V(static_cast<double>(n) * a);
        sum += chi > 0 ? term : -term;
        abs_sum += std::fabs(term);
        weight += w;
    }

    CentralValue cv;
    cv.d0 = d0;
    cv.q = q;
    cv.scheme = tag;
    cv.value = 2 * sum.value();
    const double eps = std::numeric_limits<double>::epsilon();
    cv.est_error = afe_tail_bound(N, a) + 2 * weight * Kernel::abs_error + 8 * eps * abs_sum;
    if (!std::isfinite(cv.value))
        throw std::runtime_error("l_central: non-finite value at d0 = " + std::to_string(d0));
    return cv;
}

inline CentralValue l_central(std::uint64_t d0, Scheme s = Scheme::kernelB)
{
    return s == Scheme::kernelA ? l_central_with(d0, kernel_a(), s)
                                : l_central_with(d0, kernel_b(), s);
}

} // namespace qcubic::lcentral
