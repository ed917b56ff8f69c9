#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "qcubic/arith/sieve.hpp"
#include "qcubic/arith/factor.hpp"
#include "qcubic/numeric/bigreal.hpp"

namespace qcubic::constants {

using numeric::BigReal;
using numeric::Real;
using Rational = boost::multiprecision::mpq_rational;

/// B_0 .. B_n, exact (B_1 = -1/2).
inline std::vector<Rational> bernoulli_numbers(std::size_t n)
{
    std::vector<Rational> B(n + 1);
    B[0] = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        // sum_{k=0}^{m} C(m+1, k) B_k = 0
        Rational acc = 0;
        Rational binom = 1; // C(m+1, k)
        for (std::size_t k = 0; k < m; ++k) {
            acc += binom * B[k];
            binom = binom * Rational(static_cast<long>(m + 1 - k), static_cast<long>(k + 1));
        }
        B[m] = -acc / Rational(static_cast<long>(m + 1));
    }
    return B;
}

inline const std::vector<Rational>& bernoulli_table()
{
    static const std::vector<Rational> B = bernoulli_numbers(400);
    return B;
}

inline Real to_real(const Rational& q)
{
    return Real(boost::multiprecision::numerator(q)) / Real(boost::multiprecision::denominator(q));
}

/// Relative size of one rounding step at the working precision.
inline Real rounding_unit()
{
    return boost::multiprecision::pow(Real(10), -static_cast<int>(numeric::working_digits()));
}

namespace detail {

inline int em_terms()
{
    const int d = static_cast<int>(numeric::working_digits());
    return std::min(d + 10, 190);
}

} // namespace detail

BigReal gamma_real(const Real& x);

/// zeta(s) for real s != 1: Euler-Maclaurin for s >= 0, the functional
/// equation below. err is the first omitted Euler-Maclaurin term plus a
/// rounding budget.
inline BigReal zeta_real(const Real& s)
{
    using boost::multiprecision::abs;
    using boost::multiprecision::pow;
    if (s == 1)
        throw std::domain_error("zeta_real: pole at s = 1");
    if (s < 0) {
        const Real one_s = 1 - s;
        const BigReal z = zeta_real(one_s);
        const BigReal g = gamma_real(one_s);
        const Real pi = boost::math::constants::pi<Real>();
        const Real f = pow(Real(2), s) * pow(pi, s - 1) * sin(pi * s / 2);
        BigReal r = BigReal(f, abs(f) * rounding_unit() * 10) * g * z;
        return r;
    }

    const int M = detail::em_terms();
    const long N = M + 10;
    const auto& B = bernoulli_table();

    Real sum = 0;
    for (long n = N - 1; n >= 1; --n)
        sum += pow(Real(n), -s);
    const Real Nr(N);
    sum += pow(Nr, 1 - s) / (s - 1) + pow(Nr, -s) / 2;

    Real rising = s;          // s (s+1) ... (s+2k-2)
    Real fact = 2;            // (2k)!
    Real npow = pow(Nr, -s - 1); // N^(-s-2k+1)
    const Real n2 = Nr * Nr;
    for (int k = 1; k <= M; ++k) {
        sum += to_real(B[2 * k]) / fact * rising * npow;
        rising *= (s + 2 * k - 1) * (s + 2 * k);
        fact *= Real(2 * k + 1) * Real(2 * k + 2);
        npow /= n2;
    }
    const Real omitted = abs(to_real(B[2 * M + 2]) / fact * rising * npow);
    const Real err = omitted + (abs(sum) + Real(N)) * rounding_unit() * 4;
    return {sum, err};
}

/// Gamma(x) for x > 0 by Stirling's series after shifting x up.
inline BigReal gamma_real(const Real& x)
{
    using boost::multiprecision::abs;
    using boost::multiprecision::exp;
    using boost::multiprecision::log;
    if (!(x > 0))
        throw std::domain_error("gamma_real: argument must be positive");
    const int M = detail::em_terms();
    const auto& B = bernoulli_table();

    Real y = x, prod = 1;
    long shifts = 0;
    while (y < M + 10) {
        prod *= y;
        y += 1;
        ++shifts;
    }
    const Real pi = boost::math::constants::pi<Real>();
    Real lg = (y - Real(0.5)) * log(y) - y + log(2 * pi) / 2;
    Real yp = 1 / y;
    const Real yi2 = 1 / (y * y);
    for (int k = 1; k <= M; ++k) {
        lg += to_real(B[2 * k]) / (Real(2 * k) * Real(2 * k - 1)) * yp;
        yp *= yi2;
    }
    const Real omitted = abs(to_real(B[2 * M + 2]) / (Real(2 * M + 2) * Real(2 * M + 1)) * yp);
    const Real g = exp(lg) / prod;
    const Real rel = omitted * 2 + (abs(lg) + Real(shifts) + 10) * rounding_unit() * 4;
    return {g, abs(g) * rel};
}

/// Prime zeta P(s) = sum_p p^(-s), s > 1, via
/// sum_{p <= 100} p^(-s) + sum_k mu(k)/k log(zeta(ks) prod_{p <= 100} (1 - p^(-ks))).
inline BigReal prime_zeta(const Real& s)
{
    using boost::multiprecision::abs;
    using boost::multiprecision::log;
    using boost::multiprecision::pow;
    if (!(s > 1))
        throw std::domain_error("prime_zeta: need s > 1");
    constexpr std::uint32_t M = 100;
    const auto primes = arith::primes_up_to(M);

    Real value = 0, err = 0;
    for (auto p : primes)
        value += pow(Real(p), -s);

    const Real target = rounding_unit();
    const Real Mr(M);
    for (long k = 1;; ++k) {
        const Real ks = s * k;
        // |log zeta_M(sigma)| <= 2 M^(1-sigma)/(sigma-1)
        const Real bound = 2 * pow(Mr, 1 - ks) / (ks - 1);
        if (bound / k < target) {
            // remaining k' > k: geometric in M^(-s)
            err += bound / k / (1 - pow(Mr, -s));
            break;
        }
        const int mu = arith::mobius(static_cast<std::uint64_t>(k));
        if (mu == 0)
            continue;
        const BigReal z = zeta_real(ks);
        Real euler = 1;
        for (auto p : primes)
            euler *= 1 - pow(Real(p), -ks);
        const Real arg = z.value * euler;
        value += mu * log(arg) / k;
        err += (z.err * euler / arg) / k + rounding_unit() * 8;
    }
    err += abs(value) * rounding_unit() * 4;
    return {value, err};
}

} // namespace qcubic::constants
