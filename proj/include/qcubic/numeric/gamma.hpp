#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace qcubic::numeric {

using cplx = std::complex<double>;

namespace detail {

// B_{2k} / (2k (2k-1)), k = 1..10
inline constexpr double stirling_coeffs[] = {
    1.0 / 12, -1.0 / 360, 1.0 / 1260, -1.0 / 1680, 1.0 / 1188,
    -691.0 / 360360, 1.0 / 156, -3617.0 / 122400, 43867.0 / 244188, -174611.0 / 125400,
};

} // namespace detail

/// log Gamma(z) for complex z off the nonpositive integers. The imaginary
/// part is only defined mod 2 pi; callers exponentiate.
inline cplx lgamma_complex(cplx z)
{
    constexpr double pi = std::numbers::pi;
    if (z.imag() == 0 && z.real() <= 0 && z.real() == std::floor(z.real()))
        throw std::domain_error("lgamma_complex: pole");
    if (z.real() < 0.5) {
        const cplx s = std::sin(pi * z);
        return std::log(pi) - std::log(s) - lgamma_complex(1.0 - z);
    }
    // shift up so the asymptotic series is accurate to double precision
    cplx shift = 0;
    while (std::abs(z) < 15) {
        shift += std::log(z);
        z += 1.0;
    }
    const cplx zi = 1.0 / z, zi2 = zi * zi;
    cplx series = 0, zp = zi;
    for (double c : detail::stirling_coeffs) {
        series += c * zp;
        zp *= zi2;
    }
    return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2 * pi) + series - shift;
}

inline cplx gamma_complex(cplx z) { return std::exp(lgamma_complex(z)); }

inline double gamma_real(double x)
{
    if (x <= 0 && x == std::floor(x))
        throw std::domain_error("gamma_real: pole");
    const cplx v = gamma_complex(cplx(x, 0));
    return v.real();
}

/// Regularized upper incomplete gamma Q(a, x) for a > 0, x >= 0, with
/// lg = log Gamma(a) supplied by the caller.
inline double gamma_q(double a, double x, double lg)
{
    if (!(a > 0) || x < 0)
        throw std::domain_error("gamma_q: need a > 0, x >= 0");
    if (x == 0)
        return 1;
    const double eps = std::numeric_limits<double>::epsilon();
    if (x < a + 1) {
        double ap = a, del = 1.0 / a, sum = del;
        for (int n = 0; n < 1000; ++n) {
            ap += 1;
            del *= x / ap;
            sum += del;
            if (std::fabs(del) < std::fabs(sum) * eps)
                break;
        }
        return 1 - sum * std::exp(-x + a * std::log(x) - lg);
    }
    const double tiny = std::numeric_limits<double>::min() / eps;
    double b = x + 1 - a, c = 1 / tiny, d = 1 / b, h = d;
    for (int i = 1; i < 1000; ++i) {
        const double an = -i * (i - a);
        b += 2;
        d = an * d + b;
        if (std::fabs(d) < tiny)
            d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny)
            c = tiny;
        d = 1 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1) < eps)
            break;
    }
    return std::exp(-x + a * std::log(x) - lg) * h;
}

inline double gamma_q(double a, double x)
{
    return gamma_q(a, x, lgamma_complex(cplx(a, 0)).real());
}

/// Non-regularized upper incomplete gamma Gamma(a, x), complex a, x > 0.
inline cplx gamma_upper(cplx a, double x)
{
    if (!(x > 0))
        throw std::domain_error("gamma_upper: need x > 0");
    const double eps = std::numeric_limits<double>::epsilon();
    const cplx pref = std::exp(-x + a * std::log(x));
    if (x < std::max(1.0, a.real() + 1)) {
        // Gamma(a) - gamma(a, x) with the lower part as a power series
        cplx ap = a, del = 1.0 / a, sum = del;
        for (int n = 0; n < 2000; ++n) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::abs(del) < std::abs(sum) * eps)
                break;
        }
        return gamma_complex(a) - sum * pref;
    }
    const double tiny = 1e-300;
    cplx b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i < 5000; ++i) {
        const cplx an = -double(i) * (double(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny)
            d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny)
            c = tiny;
        d = 1.0 / d;
        const cplx del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < eps)
            break;
    }
    return pref * h;
}

} // namespace qcubic::numeric
