#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcubic/arith/factor.hpp"
#include "qcubic/arith/kronecker.hpp"
#include "qcubic/arith/sieve.hpp"
#include "qcubic/constants/special.hpp"
#include "qcubic/numeric/parallel.hpp"
#include "qcubic/ratfun/identity.hpp"

namespace qcubic::constants {

/// a_1..a_n with log P(x) = sum_j a_j x^j, from the series of P'/P.
inline std::vector<Rational> log_series(const ratfun::QPoly& P, std::size_t n)
{
    if (P[0] != 1)
        throw std::invalid_argument("log_series: need P(0) = 1");
    const ratfun::QRF q(P.derivative(), P);
    const auto c = q.series_coefficients(n);
    std::vector<Rational> a(n + 1, Rational(0));
    for (std::size_t j = 1; j <= n; ++j)
        a[j] = c[j - 1] / Rational(static_cast<long>(j));
    return a;
}

inline Real eval_poly(const ratfun::QPoly& p, const Real& x)
{
    Real acc = 0;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * x + to_real(*it);
    return acc;
}

/// (9/(256 pi)) 2^(1/4) (-181 + 128 sqrt 2) Gamma(1/4)^4 zeta(1/2)^7
inline BigReal theorem_a_prefactor()
{
    using boost::multiprecision::abs;
    using boost::multiprecision::pow;
    using boost::multiprecision::sqrt;
    const Real pi = boost::math::constants::pi<Real>();
    const Real c = Real(9) / (256 * pi) * pow(Real(2), Real(0.25)) * (128 * sqrt(Real(2)) - 181);
    // -181 + 128 sqrt 2 cancels about 4 digits
    const BigReal cb(c, abs(c) * rounding_unit() * 1e5);
    const BigReal g = gamma_real(Real(0.25));
    const BigReal z = zeta_real(Real(0.5));
    return cb * g.pow(4) * z.pow(7);
}

struct TheoremABreakdown {
    std::uint64_t prime_limit = 0;
    int tail_order = 0;
    BigReal prefactor;
    BigReal product;   // prod_{3 <= p <= P} P(p^(-1/2))
    BigReal log_tail;  // log prod_{p > P} P(p^(-1/2)), err includes the truncation bound
    Real truncation_bound = 0;
    BigReal value;
};

namespace detail {

/// Bound on sum_{p > P} |sum_{j > J} a_j p^(-j/2)| by Cauchy estimates on
/// |x| = r, where |P(x) - 1| <= W(r) < 1 and |a_j| <= -log(1 - W(r)) / r^j.
inline Real log_tail_truncation(const ratfun::QPoly& P, std::uint64_t prime_limit, int J)
{
    using boost::multiprecision::log;
    using boost::multiprecision::pow;
    Real best = -1;
    for (int i = 15; i <= 60; ++i) {
        const Real r = Real(i) / 100;
        Real W = 0;
        for (int k = 1; k <= P.degree(); ++k)
            W += abs(to_real(P[k])) * pow(r, k);
        if (W >= 1)
            continue;
        const Real Mr = -log(1 - W);
        const Real x0 = 1 / sqrt(Real(prime_limit));
        if (x0 >= r)
            continue;
        // sum_{j > J} (x/r)^j <= (x/r)^(J+1) / (1 - x0/r); sum_{n > P} n^(-alpha) <= P^(1-alpha)/(alpha-1)
        const Real alpha = Real(J + 1) / 2;
        const Real bound = Mr * pow(r, -(J + 1)) / (1 - x0 / r) *
                           pow(Real(prime_limit), 1 - alpha) / (alpha - 1);
        if (best < 0 || bound < best)
            best = bound;
    }
    if (best < 0)
        throw std::runtime_error("log_tail_truncation: no admissible radius");
    return best;
}

} // namespace detail

inline TheoremABreakdown theorem_a_breakdown(std::uint64_t prime_limit, int tail_order,
                                             unsigned workers = 1)
{
    using boost::multiprecision::abs;
    using boost::multiprecision::exp;
    using boost::multiprecision::pow;
    using boost::multiprecision::sqrt;
    if (prime_limit < 100)
        throw std::invalid_argument("theorem_a_residue: prime_limit must be >= 100");
    if (tail_order < 3 || tail_order > 16)
        throw std::invalid_argument("theorem_a_residue: tail_order must be in [3, 16]");
    if (prime_limit > 100'000'000)
        throw std::invalid_argument("theorem_a_residue: prime_limit above 1e8");

    const ratfun::QPoly P = ratfun::p_polynomial();
    const int J = tail_order;
    const auto primes = arith::primes_up_to(static_cast<std::uint32_t>(prime_limit));

    struct Block {
        Real prod = 1;
        std::vector<Real> partial; // sum p^(-j/2), j = 0..J
    };
    const auto blocks = numeric::split_blocks(primes.size(), 16);
    const auto parts = numeric::parallel_map<Block>(blocks.size(), workers, [&](std::size_t b) {
        Block out;
        out.partial.assign(J + 1, Real(0));
        for (std::size_t i = blocks[b].first; i < blocks[b].second; ++i) {
            const Real x = 1 / sqrt(Real(primes[i]));
            if (primes[i] > 2)
                out.prod *= eval_poly(P, x);
            Real xp = x * x * x;
            for (int j = 3; j <= J; ++j) {
                out.partial[j] += xp;
                xp *= x;
            }
        }
        return out;
    });

    Real prod = 1;
    std::vector<Real> partial(J + 1, Real(0));
    for (const auto& b : parts) {
        prod *= b.prod;
        for (int j = 3; j <= J; ++j)
            partial[j] += b.partial[j];
    }

    TheoremABreakdown br;
    br.prime_limit = prime_limit;
    br.tail_order = J;
    br.prefactor = theorem_a_prefactor();
    br.product = BigReal(prod, abs(prod) * rounding_unit() * Real(20 * (primes.size() + 10)));

    const auto a = log_series(P, static_cast<std::size_t>(J));
    Real tail = 0, tail_err = 0;
    for (int j = 3; j <= J; ++j) {
        const BigReal pz = prime_zeta(Real(j) / 2);
        const Real aj = to_real(a[j]);
        tail += aj * (pz.value - partial[j]);
        tail_err += abs(aj) * (pz.err + abs(partial[j]) * rounding_unit() *
                                           Real(8 * (primes.size() + 10)));
    }
    br.truncation_bound = detail::log_tail_truncation(P, prime_limit, J);
    br.log_tail = BigReal(tail, tail_err + br.truncation_bound);

    // exp(t +- e) = exp(t) (1 +- (e^e - 1))
    const Real et = exp(tail);
    const BigReal exp_tail(et, et * (exp(br.log_tail.err) - 1) + et * rounding_unit() * 4);
    br.value = br.prefactor * br.product * exp_tail;
    return br;
}

inline BigReal theorem_a_residue(std::uint64_t prime_limit, int tail_order, unsigned workers = 1)
{
    return theorem_a_breakdown(prime_limit, tail_order, workers).value;
}

struct ResidueParams {
    std::uint64_t c1 = 1, c2 = 1, c3 = 1;

    void validate() const
    {
        for (std::uint64_t c : {c1, c2, c3}) {
            if (c == 0 || (c & 1) == 0 || !arith::is_squarefree(c))
                throw std::invalid_argument("ResidueParams: c_i must be odd squarefree positive");
        }
        if (std::gcd(c1, c2) != 1 || std::gcd(c1, c3) != 1 || std::gcd(c2, c3) != 1)
            throw std::invalid_argument("ResidueParams: c_i must be pairwise coprime");
    }
};

/// Residue at s = 3/4 for (c1, c2, c3): the global prefactor times
/// (2 c1 / c2), c1^(-1/4) prod_{p|c1} u1, c2^(-1/2) prod_{p|c2} u2, prod_{p|c3} u3.
inline BigReal prop_residue(const ResidueParams& rp)
{
    using boost::multiprecision::abs;
    using boost::multiprecision::pow;
    using boost::multiprecision::sqrt;
    rp.validate();
    const auto lines = ratfun::standard_lines();
    const int sign = arith::kronecker(static_cast<std::int64_t>(2 * rp.c1),
                                      static_cast<std::int64_t>(rp.c2));
    Real f = sign;
    f *= pow(Real(rp.c1), Real(-0.25)) * pow(Real(rp.c2), Real(-0.5));
    auto lines_for = [&](std::uint64_t c, const ratfun::QPoly& u) {
        if (c == 1)
            return;
        for (const auto& pe : arith::factorize(c))
            f *= eval_poly(u, 1 / sqrt(Real(pe.prime)));
    };
    lines_for(rp.c1, lines.u1);
    lines_for(rp.c2, lines.u2);
    lines_for(rp.c3, lines.u3);
    return theorem_a_prefactor() * BigReal(f, abs(f) * rounding_unit() * 100);
}

/// zeta^(2c)(w) = zeta(w) prod_{p | 2c} (1 - p^(-w))
inline BigReal zeta_removed(const Real& w, std::uint64_t c)
{
    using boost::multiprecision::pow;
    BigReal z = zeta_real(w);
    Real e = 1 - pow(Real(2), -w);
    if (c > 1)
        for (const auto& pe : arith::factorize(c))
            e *= 1 - pow(Real(pe.prime), -w);
    return z * BigReal(e, abs(e) * rounding_unit() * 10);
}

/// Residue at s4 = 1 for trivial chi_{a2 c2}.
inline BigReal r_c_residue(const Real& s1, const Real& s2, const Real& s3, std::uint64_t c)
{
    if (c == 0 || (c & 1) == 0 || !arith::is_squarefree(c))
        throw std::invalid_argument("r_c_residue: c must be odd squarefree positive");
    const Real args[7] = {2 * s1, 2 * s2, 2 * s3, s1 + s2, s1 + s3, s2 + s3, 2 * (s1 + s2 + s3) - 1};
    for (const auto& w : args)
        if (w == 1)
            throw std::domain_error("r_c_residue: zeta argument equals 1 (pole)");
    BigReal r(Real(1), Real(0));
    for (const auto& w : args)
        r = r * zeta_removed(w, c);
    Real e = Real(1) / 2;
    if (c > 1)
        for (const auto& pe : arith::factorize(c))
            e *= 1 - Real(1) / Real(pe.prime);
    return r * BigReal(e, e * rounding_unit() * 10);
}

inline nlohmann::json constant_json(const std::string& name, const BigReal& v,
                                    nlohmann::json params = nlohmann::json::object())
{
    nlohmann::json j;
    j["name"] = name;
    j["value"] = v.str();
    j["value_double"] = v.to_double();
    j["err"] = v.err.str(3, std::ios_base::scientific);
    j["certified_digits"] = v.certified_digits();
    j["parameters"] = std::move(params);
    return j;
}

} // namespace qcubic::constants
