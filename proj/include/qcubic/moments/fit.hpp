#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include "qcubic/moments/moment.hpp"

namespace qcubic::moments {

inline constexpr int main_degree = 6;

struct FitReport {
    std::vector<double> coefficients;                  // Q(u) = sum c_k u^k, u = log x
    std::vector<std::pair<double, double>> residuals;  // (x, sum - x Q(log x))
    double secondary_coeff = 0;                        // coefficient of x^(3/4)
    double secondary_uncertainty = 0;                  // bootstrap standard deviation
    double secondary_pred = 0;
    double r_squared = 0;
    int bootstrap_rounds = 0;
    std::uint64_t seed = 0;
};

struct FitOptions {
    std::uint64_t seed = 0;
    int bootstrap_rounds = 200;
    double secondary_pred = 0; // residue times W^(3/4)
};

struct LinearFit {
    std::vector<double> poly; // coefficients in u
    double secondary = 0;
};

namespace detail {

// the x^(-1/4) column is close to the polynomial span, so the solve runs at 40 digits
using FitScalar = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<40>,
                                                boost::multiprecision::et_off>;

inline double binom(int n, int k)
{
    double r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

/// Least squares of sum/x on 1, v, ..., v^6 with v the centered and scaled
/// log x, then the slope of that residual against x^(-1/4) with the
/// polynomial part of x^(-1/4) removed (equal to the joint coefficient).
inline LinearFit solve(const std::vector<MomentSample>& s, const std::vector<std::size_t>& idx)
{
    using Mat = Eigen::Matrix<FitScalar, Eigen::Dynamic, Eigen::Dynamic>;
    using Vec = Eigen::Matrix<FitScalar, Eigen::Dynamic, 1>;
    const int cols = main_degree + 1;
    const auto n = static_cast<Eigen::Index>(idx.size());
    if (n < cols + 1)
        throw std::domain_error("scan_and_fit: rank-deficient design matrix (" + std::to_string(n) +
                                " points for " + std::to_string(cols + 1) + " unknowns)");
    FitScalar umin = INFINITY, umax = -INFINITY;
    for (auto i : idx) {
        const FitScalar u = log(FitScalar(s[i].x));
        umin = std::min(umin, u);
        umax = std::max(umax, u);
    }
    const FitScalar m = (umax + umin) / 2;
    const FitScalar h = umax > umin ? FitScalar((umax - umin) / 2) : FitScalar(1);

    Mat A(n, cols);
    Vec y(n), z(n);
    for (Eigen::Index r = 0; r < n; ++r) {
        const auto& p = s[idx[static_cast<std::size_t>(r)]];
        const FitScalar x = p.x;
        const FitScalar v = (log(x) - m) / h;
        FitScalar vk = 1;
        for (int k = 0; k < cols; ++k, vk *= v)
            A(r, k) = vk;
        z(r) = pow(x, FitScalar(-0.25));
        y(r) = FitScalar(p.sum) / x;
    }
    std::vector<FitScalar> scale(cols);
    for (int k = 0; k < cols; ++k) {
        scale[k] = A.col(k).norm();
        A.col(k) /= scale[k];
    }
    Eigen::ColPivHouseholderQR<Mat> qr(A);
    qr.setThreshold(FitScalar(1e-25));
    if (qr.rank() < cols)
        throw std::domain_error("scan_and_fit: rank-deficient design matrix (rank " +
                                std::to_string(qr.rank()) + ")");
    Vec c = qr.solve(y);
    const Vec ry = y - A * c;
    const Vec rz = z - A * qr.solve(z);
    if (rz.norm() <= FitScalar(1e-25) * z.norm())
        throw std::domain_error("scan_and_fit: rank-deficient design matrix (x^(3/4) column in span)");
    for (int k = 0; k < cols; ++k)
        c(k) /= scale[k];

    // sum_k a_k ((u - m)/h)^k in powers of u
    std::vector<FitScalar> poly(main_degree + 1, FitScalar(0));
    for (int k = 0; k <= main_degree; ++k) {
        const FitScalar ak = c(k) / pow(h, k);
        for (int i = 0; i <= k; ++i)
            poly[i] += ak * binom(k, i) * pow(-m, k - i);
    }
    LinearFit f;
    for (const auto& v : poly)
        f.poly.push_back(v.convert_to<double>());
    f.secondary = (ry.dot(rz) / rz.squaredNorm()).convert_to<double>();
    return f;
}

inline double eval_q(const std::vector<double>& c, double u)
{
    double acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * u + *it;
    return acc;
}

} // namespace detail

/// Main term x Q(log x) with deg Q = 6; secondary_coeff is the x^(3/4)
/// coefficient of the joint model, r_squared that of the main term alone.
inline FitReport fit_samples(const std::vector<MomentSample>& samples, const FitOptions& opt = {})
{
    std::vector<std::size_t> all(samples.size());
    std::iota(all.begin(), all.end(), 0);
    const LinearFit f = detail::solve(samples, all);

    FitReport r;
    r.coefficients = f.poly;
    r.secondary_coeff = f.secondary;
    r.secondary_pred = opt.secondary_pred;
    r.seed = opt.seed;

    double mean = 0;
    for (const auto& s : samples)
        mean += s.sum / s.x;
    mean /= static_cast<double>(samples.size());
    double ss_res = 0, ss_tot = 0;
    for (const auto& s : samples) {
        const double main = s.x * detail::eval_q(f.poly, std::log(s.x));
        r.residuals.emplace_back(s.x, s.sum - main);
        const double e = s.sum / s.x - main / s.x;
        ss_res += e * e;
        ss_tot += (s.sum / s.x - mean) * (s.sum / s.x - mean);
    }
    r.r_squared = ss_tot > 0 ? 1 - ss_res / ss_tot : 1.0;

    // bootstrap over random grid subsets of three quarters of the points
    const std::size_t k = std::max<std::size_t>(main_degree + 3, (3 * samples.size() + 3) / 4);
    if (opt.bootstrap_rounds > 0 && k < samples.size()) {
        std::mt19937_64 rng(opt.seed);
        std::vector<double> draws;
        for (int b = 0; b < opt.bootstrap_rounds; ++b) {
            std::vector<std::size_t> idx = all;
            std::shuffle(idx.begin(), idx.end(), rng);
            idx.resize(k);
            std::sort(idx.begin(), idx.end());
            draws.push_back(detail::solve(samples, idx).secondary);
        }
        const double mu = std::accumulate(draws.begin(), draws.end(), 0.0) / draws.size();
        double var = 0;
        for (double d : draws)
            var += (d - mu) * (d - mu);
        r.secondary_uncertainty = std::sqrt(var / (draws.size() - 1));
        r.bootstrap_rounds = opt.bootstrap_rounds;
    }
    return r;
}

/// Moments on the grid from the table, then fit_samples.
inline FitReport scan_and_fit(const std::vector<double>& grid, const lcentral::CentralTable& table,
                              const FitOptions& opt = {}, unsigned workers = 1,
                              std::vector<MomentSample>* samples_out = nullptr)
{
    if (grid.size() < main_degree + 2)
        throw std::domain_error("scan_and_fit: rank-deficient design matrix (" +
                                std::to_string(grid.size()) + " grid points)");
    const auto [mn, mx] = std::minmax_element(grid.begin(), grid.end());
    if (grid.size() < 10 || *mx < 100 * *mn)
        throw std::invalid_argument("scan_and_fit: need >= 10 grid points spanning >= 2 decades");
    auto samples = moment_scan(grid, table, workers);
    FitReport r = fit_samples(samples, opt);
    if (samples_out)
        *samples_out = std::move(samples);
    return r;
}

} // namespace qcubic::moments
