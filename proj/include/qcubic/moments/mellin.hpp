#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "qcubic/moments/weight.hpp"

namespace qcubic::moments {

/// Calibrated once per process.
inline const WeightFunction& default_weight()
{
    static const WeightFunction w = build_weight();
    return w;
}

struct MellinValue {
    std::complex<double> value;
    double error = 0; // quadrature estimate, real and imaginary parts combined
    double l1 = 0;    // int |W(u) u^(s-1)| du
};

inline MellinValue mellin_w_detail(std::complex<double> s, const WeightFunction& w = default_weight(),
                                   double tol = 1e-12)
{
    if (!(s.real() > -3))
        throw std::domain_error("mellin_w: need Re(s) > -3");
    using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
    const double sigma = s.real(), tau = s.imag();
    auto re = [&](double u) { return w(u) * std::pow(u, sigma - 1) * std::cos(tau * std::log(u)); };
    auto im = [&](double u) { return w(u) * std::pow(u, sigma - 1) * std::sin(tau * std::log(u)); };
    auto ab = [&](double u) { return w(u) * std::pow(u, sigma - 1); };
    double er = 0, ei = 0, l1 = 0;
    MellinValue m;
    m.l1 = GK::integrate(ab, 0.5, 1.0, 15, tol, nullptr, &l1);
    const double r = GK::integrate(re, 0.5, 1.0, 15, tol, &er);
    const double i = GK::integrate(im, 0.5, 1.0, 15, tol, &ei);
    m.value = {r, i};
    m.error = er + ei;
    return m;
}

/// W^(s) = int_0^inf W(u) u^s du/u.
inline std::complex<double> mellin_w(std::complex<double> s, const WeightFunction& w = default_weight())
{
    return mellin_w_detail(s, w).value;
}

/// 1/((3 + Re s)|s||s+1||s+2|), from three integrations by parts with |W'''| <= 1.
inline double mellin_bound(std::complex<double> s)
{
    return 1.0 / ((3 + s.real()) * std::abs(s) * std::abs(s + 1.0) * std::abs(s + 2.0));
}

} // namespace qcubic::moments
