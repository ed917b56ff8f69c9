#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "qcubic/arith/kronecker.hpp"
#include "qcubic/lcentral/lvalue.hpp"
#include "qcubic/numeric/gamma.hpp"

namespace qcubic::lcentral {

/// Lambda(s) = (q/pi)^(s/2) Gamma(s/2) L(s, chi_{8 d0}) from the theta split at Y:
/// sum chi(n) [ (pi n^2/q)^(-s/2) Gamma(s/2, pi n^2 Y/q)
///            + (pi n^2/q)^(-(1-s)/2) Gamma((1-s)/2, pi n^2/(q Y)) ].
/// The second half uses root number +1.
inline std::complex<double> completed_l(std::uint64_t d0, std::complex<double> s, double Y = 1.2)
{
    check_d0(d0);
    const double q = 8.0 * static_cast<double>(d0);
    const auto qi = static_cast<std::int64_t>(8 * d0);
    const double lo = std::min(Y, 1 / Y);
    std::complex<double> acc = 0;
    for (std::uint64_t n = 1;; n += 2) {
        const double u = std::numbers::pi * static_cast<double>(n) * static_cast<double>(n) / q;
        if (u * lo > 60)
            break;
        const int chi = arith::kronecker(qi, static_cast<std::int64_t>(n));
        if (chi == 0)
            continue;
        const std::complex<double> t1 =
            std::exp(-s / 2.0 * std::log(u)) * numeric::gamma_upper(s / 2.0, u * Y);
        const std::complex<double> t2 =
            std::exp(-(1.0 - s) / 2.0 * std::log(u)) * numeric::gamma_upper((1.0 - s) / 2.0, u / Y);
        acc += static_cast<double>(chi) * (t1 + t2);
    }
    return acc;
}

/// max over t of |Lambda(1/2+it) - Lambda(1/2-it)| / |Lambda(1/2+it)|.
inline double fe_residual(std::uint64_t d0, const std::vector<double>& ts, double Y = 1.2)
{
    double worst = 0;
    for (double t : ts) {
        if (t == 0)
            continue;
        const auto a = completed_l(d0, {0.5, t}, Y);
        const auto b = completed_l(d0, {0.5, -t}, Y);
        worst = std::max(worst, std::abs(a - b) / std::abs(a));
    }
    return worst;
}

} // namespace qcubic::lcentral
