#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcubic/arith/character.hpp"
#include "qcubic/arith/factor.hpp"
#include "qcubic/arith/kronecker.hpp"
#include "qcubic/ratfun/ppart.hpp"

namespace qcubic::ratfun {

struct LocalFactor {
    std::uint64_t p;
    int l;
    int epsilon;       // twist sign on the f_even^- part
    int epsilon_prime; // chi_{a c d0}(p), 0 when p | d0
    long double value;
};

struct LocalCorrection {
    std::uint64_t d = 1, d0 = 1, d1 = 1;
    std::vector<LocalFactor> factors;

    long double product() const
    {
        long double r = 1;
        for (const auto& f : factors)
            r *= f.value;
        return r;
    }
};

/// N_p (1 - eps' p^(-1/2))^3 with N_p = [z^l] f_odd for odd l and
/// [z^l] f_even^+ + eps [z^l] f_even^- for even l.
inline long double local_factor_value(std::int64_t p, int l, int eps, int eps_prime)
{
    const PPart pp = PPart::numeric(p);
    long double n;
    if (l & 1)
        n = pp.f_odd().coefficient(static_cast<std::size_t>(l));
    else
        n = pp.f_even_plus().coefficient(static_cast<std::size_t>(l)) +
            eps * pp.f_even_minus().coefficient(static_cast<std::size_t>(l));
    const long double c = 1 - eps_prime / std::sqrt(static_cast<long double>(p));
    return n * c * c * c;
}

/// Diagonal local correction at s1 = s2 = s3 = 1/2 for d = d0 d1^2, with
/// chi1 = chi_{a c}. Only primes with p^2 | d contribute.
inline LocalCorrection local_correction(std::uint64_t d, const arith::QuadraticCharacter& chi1)
{
    if (d == 0 || (d & 1) == 0)
        throw std::invalid_argument("local_correction: d must be odd and positive");
    if (chi1.kind() != arith::QuadraticCharacter::Kind::chi_ac)
        throw std::invalid_argument("local_correction: chi1 must be of kind chi_ac");
    const std::uint64_t c = static_cast<std::uint64_t>(chi1.c());
    if (std::gcd(d, c) != 1)
        throw std::invalid_argument("local_correction: gcd(d, c) = " +
                                    std::to_string(std::gcd(d, c)) + " > 1");

    LocalCorrection out;
    out.d = d;
    const auto sq = arith::square_decompose(d);
    out.d0 = sq.core;
    out.d1 = sq.root;
    const auto chi_prime = arith::QuadraticCharacter::from_d(
        static_cast<std::int64_t>(chi1.a()) * chi1.c() * static_cast<std::int64_t>(out.d0));

    for (const auto& [p, l] : arith::factorize(d)) {
        if (l < 2)
            continue;
        std::uint64_t pl = 1;
        for (int i = 0; i < l; ++i)
            pl *= p;
        const auto ip = static_cast<std::int64_t>(p);
        const int eps = chi1(ip) * arith::kronecker(static_cast<std::int64_t>(d / pl), ip);
        const int epsp = chi_prime(ip);
        const long double v = local_factor_value(ip, l, eps, epsp);
        if (!std::isfinite(v) || v == 0)
            throw std::runtime_error("local_correction: degenerate local value at p = " +
                                     std::to_string(p));
        out.factors.push_back({p, l, eps, epsp, v});
    }
    return out;
}

inline long double convexity_constant(double eta = 0.2)
{
    return 10084.0L / (1.0L - std::pow(3.0L, -2.0L * eta));
}

/// (10084/(1-3^(-2 eta)))^omega(d1) * d1^(1/2+eta)
inline long double convexity_bound(std::uint64_t d1, double eta = 0.2)
{
    const int w = d1 == 1 ? 0 : arith::omega(d1);
    return std::pow(convexity_constant(eta), w) *
           std::pow(static_cast<long double>(d1), 0.5L + eta);
}

} // namespace qcubic::ratfun
