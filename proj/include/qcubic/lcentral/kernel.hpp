#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcubic/numeric/gamma.hpp"

namespace qcubic::lcentral {

enum class Scheme { kernelA, kernelB };

inline const char* scheme_name(Scheme s) { return s == Scheme::kernelA ? "kernelA" : "kernelB"; }

inline Scheme parse_scheme(const std::string& s)
{
    if (s == "kernelA" || s == "A")
        return Scheme::kernelA;
    if (s == "kernelB" || s == "B")
        return Scheme::kernelB;
    throw std::invalid_argument("unknown scheme: " + s);
}

inline constexpr const char* kernel_version = "afe-1";

/// log Gamma(1/4)
inline double lgamma_quarter()
{
    static const double v = numeric::lgamma_complex({0.25, 0}).real();
    return v;
}

/// V(y) = Q(1/4, y^2).
class IncompleteGammaKernel {
public:
    double operator()(double y) const
    {
        if (!(y > 0))
            throw std::domain_error("smoothing_kernel: y must be positive");
        return numeric::gamma_q(0.25, y * y, lgamma_quarter());
    }

    /// Absolute accuracy of operator() on y > 0.
    static constexpr double abs_error = 1e-14;
};

/// V(y) = (1/2 pi i) int_{(c)} Gamma(s/2 + 1/4) / (Gamma(1/4) s) y^(-s) ds by the
/// trapezoidal rule in t = Im s. The integrand is analytic within distance c
/// of the line (pole at s = 0) and decays like exp(-pi |t| / 4).
class ContourKernel {
public:
    explicit ContourKernel(double c = 1.0, double h = 0.05, double T = 60.0) : c_(c), h_(h)
    {
        const int n = static_cast<int>(std::ceil(T / h));
        w_.resize(n + 1);
        const double lg4 = lgamma_quarter();
        for (int k = 0; k <= n; ++k) {
            const std::complex<double> s(c, k * h);
            const auto g = std::exp(numeric::lgamma_complex(s / 2.0 + 0.25) - lg4) / s;
            w_[k] = (k == 0 ? 0.5 : 1.0) * h / std::numbers::pi * g;
        }
    }

    double operator()(double y) const
    {
        if (!(y > 0))
            throw std::domain_error("smoothing_kernel: y must be positive");
        const double ly = std::log(y);
        const std::complex<double> rot = std::polar(1.0, -h_ * ly);
        std::complex<double> e = 1;
        double acc = 0;
        for (std::size_t k = 0; k < w_.size(); ++k) {
            if ((k & 31) == 0)
                e = std::polar(1.0, -h_ * ly * static_cast<double>(k));
            acc += (w_[k] * e).real();
            e *= rot;
        }
        return acc * std::exp(-c_ * ly);
    }

    /// Conservative absolute accuracy for y >= 1e-3 (roundoff dominated).
    static constexpr double abs_error = 1e-12;

private:
    double c_, h_;
    std::vector<std::complex<double>> w_;
};

inline const IncompleteGammaKernel& kernel_b()
{
    static const IncompleteGammaKernel k;
    return k;
}

inline const ContourKernel& kernel_a()
{
    static const ContourKernel k;
    return k;
}

inline double smoothing_kernel(double y, Scheme s)
{
    return s == Scheme::kernelA ? kernel_a()(y) : kernel_b()(y);
}

/// Upper bound V(y) <= exp(-y^2) / (Gamma(1/4) y^(3/2)).
inline double kernel_majorant(double y)
{
    return std::exp(-y * y - lgamma_quarter()) / std::pow(y, 1.5);
}

} // namespace qcubic::lcentral
