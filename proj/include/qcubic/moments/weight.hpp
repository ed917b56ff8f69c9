#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <boost/math/tools/minima.hpp>
#include <boost/multiprecision/gmp.hpp>

#include "qcubic/ratfun/polynomial.hpp"

namespace qcubic::moments {

/// b(u) = exp(-1/((u - 1/2)(1 - u))) on (1/2, 1), W = b / kappa with
/// kappa = max_{j <= 3} sup |b^(j)|.
class WeightFunction {
public:
    static constexpr int max_order = 3;
    static constexpr int grid_cells = 10000;

    double kappa() const { return kappa_; }
    double lo() const { return 0.5; }
    double hi() const { return 1.0; }

    /// b^(j)(u) for 0 <= j <= 5.
    double bump(int j, double u) const
    {
        if (j < 0 || j >= static_cast<int>(numer_.size()))
            throw std::out_of_range("WeightFunction: derivative order");
        if (!(u > 0.5 && u < 1.0))
            return 0.0;
        const double q = (u - 0.5) * (1.0 - u);
        const double e = 1.0 / q;
        if (e > 700)
            return 0.0;
        // numerators are stored in v = u - 3/4, where their terms do not cancel
        const double v = u - 0.75;
        double n = 0;
        const auto& c = numer_[j];
        for (auto it = c.rbegin(); it != c.rend(); ++it)
            n = n * v + *it;
        return std::exp(-e) * n * std::pow(e, 2 * j);
    }

    double operator()(double u) const { return bump(0, u) / kappa_; }
    double derivative(int j, double u) const { return bump(j, u) / kappa_; }

    /// sup |W^(j)| over the calibration grid, j = 0..3.
    const std::array<double, max_order + 1>& grid_sup() const { return grid_sup_; }
    /// Locally refined sup |W^(j)|, j = 0..3.
    const std::array<double, max_order + 1>& refined_sup() const { return refined_sup_; }
    /// Grid maximum plus the interpolation bound h^2/8 sup|f''| per cell, j = 0..3.
    const std::array<double, max_order + 1>& certified_sup() const { return certified_sup_; }

    friend WeightFunction build_weight();

private:
    double kappa_ = 1;
    std::vector<std::vector<double>> numer_;
    std::array<double, max_order + 1> grid_sup_{}, refined_sup_{}, certified_sup_{};
};

/// Numerators N_j with b^(j) = b N_j / q^(2j), q = (u - 1/2)(1 - u), from
/// N_{j+1} = N_j' q^2 - 2j N_j q' q + N_j q'.
inline std::vector<ratfun::Polynomial<boost::multiprecision::mpq_rational>> bump_numerators(int n)
{
    using Q = boost::multiprecision::mpq_rational;
    using P = ratfun::Polynomial<Q>;
    const P q({Q(-1, 2), Q(3, 2), Q(-1)});
    const P dq = q.derivative();
    std::vector<P> out{P(Q(1))};
    for (int j = 0; j < n; ++j) {
        const P& N = out.back();
        out.push_back(N.derivative() * q * q - N * dq * q * Q(2 * j) + N * dq);
    }
    return out;
}

inline WeightFunction build_weight()
{
    using Q = boost::multiprecision::mpq_rational;
    using P = ratfun::Polynomial<Q>;
    WeightFunction w;
    const P shift({Q(3, 4), Q(1)});
    for (const auto& p : bump_numerators(5)) {
        P pv;
        for (int k = p.degree(); k >= 0; --k)
            pv = pv * shift + P(p[k]);
        std::vector<double> c;
        for (const auto& x : pv.coefficients())
            c.push_back(x.convert_to<double>());
        w.numer_.push_back(std::move(c));
    }

    constexpr int n = WeightFunction::grid_cells;
    const double h = 0.5 / n;
    auto node = [&](int i) { return 0.5 + h * i; };

    std::array<double, 6> gsup{};
    std::array<int, 6> arg{};
    for (int j = 0; j <= 5; ++j)
        for (int i = 0; i <= n; ++i) {
            const double v = std::fabs(w.bump(j, node(i)));
            if (v > gsup[j]) {
                gsup[j] = v;
                arg[j] = i;
            }
        }

    std::array<double, 4> refined{}, certified{};
    for (int j = 0; j <= 3; ++j) {
        auto neg = [&](double u) { return -std::fabs(w.bump(j, u)); };
        const auto r = boost::math::tools::brent_find_minima(neg, node(arg[j] - 1), node(arg[j] + 1), 50);
        refined[j] = std::max(gsup[j], -r.second);
        // |f| <= max(|f(a)|, |f(b)|) + h^2/8 sup|f''| on each cell; the grid
        // estimate of sup|f''| is doubled, the term is ~1e-7 relative.
        certified[j] = gsup[j] + h * h / 8 * 2 * gsup[j + 2];
    }
    double kappa = 0;
    for (int j = 0; j <= 3; ++j)
        kappa = std::max({kappa, refined[j], certified[j]});
    w.kappa_ = kappa;
    for (int j = 0; j <= 3; ++j) {
        w.grid_sup_[j] = gsup[j] / kappa;
        w.refined_sup_[j] = refined[j] / kappa;
        w.certified_sup_[j] = certified[j] / kappa;
    }
    return w;
}

} // namespace qcubic::moments
