#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcubic/arith/sieve.hpp"
#include "qcubic/lcentral/batch.hpp"
#include "qcubic/moments/mellin.hpp"
#include "qcubic/numeric/parallel.hpp"
#include "qcubic/numeric/summation.hpp"

namespace qcubic::moments {

struct MomentSample {
    double x = 0;
    double sum = 0;
    std::uint64_t terms = 0;
    std::int64_t runtime_ms = 0;
};

/// sum over odd squarefree d in [x/2, x] of L(1/2, chi_{8d})^3 W(d/x), ascending d.
inline MomentSample third_moment(double x, const lcentral::CentralTable& table,
                                 const WeightFunction& w = default_weight())
{
    if (!(x >= 2) || !std::isfinite(x) || x > 1e12)
        throw std::invalid_argument("third_moment: need 2 <= x <= 1e12");
    const auto t0 = std::chrono::steady_clock::now();
    const auto lo = static_cast<std::uint64_t>(std::ceil(x / 2));
    const auto hi = static_cast<std::uint64_t>(std::floor(x));

    const arith::SquarefreeTable sf(hi);
    const auto ds = sf.odd_in(lo, hi);

    std::vector<std::uint64_t> gaps;
    numeric::CompensatedSum<double> acc;
    for (auto d : ds) {
        const auto* cv = table.find(d);
        if (!cv) {
            gaps.push_back(d);
            continue;
        }
        const double v = cv->value;
        acc += v * v * v * w(static_cast<double>(d) / x);
    }
    if (!gaps.empty()) {
        std::string msg = "third_moment: missing L-values for " + std::to_string(gaps.size()) + " d0:";
        for (std::size_t i = 0; i < gaps.size() && i < 20; ++i)
            msg += " " + std::to_string(gaps[i]);
        if (gaps.size() > 20)
            msg += " ...";
        throw std::out_of_range(msg);
    }
    MomentSample s;
    s.x = x;
    s.sum = acc.value();
    s.terms = ds.size();
    s.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0).count();
    return s;
}

inline std::vector<double> geometric_grid(double x_min, double x_max, std::size_t points)
{
    if (!(x_min > 0) || !(x_max >= x_min) || points == 0)
        throw std::invalid_argument("geometric_grid: need 0 < x_min <= x_max and points >= 1");
    std::vector<double> g(points);
    if (points == 1) {
        g[0] = x_min;
        return g;
    }
    const double r = std::log(x_max / x_min);
    for (std::size_t i = 0; i < points; ++i)
        g[i] = x_min * std::exp(r * static_cast<double>(i) / static_cast<double>(points - 1));
    g.back() = x_max;
    return g;
}

/// One third_moment per grid point, in parallel over points.
inline std::vector<MomentSample> moment_scan(const std::vector<double>& grid,
                                             const lcentral::CentralTable& table, unsigned workers = 1,
                                             const WeightFunction& w = default_weight())
{
    return numeric::parallel_map<MomentSample>(grid.size(), workers,
                                               [&](std::size_t i) { return third_moment(grid[i], table, w); });
}

} // namespace qcubic::moments
