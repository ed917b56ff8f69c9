#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qcubic/ratfun/ppart.hpp"

namespace qcubic::ratfun {

struct LemmaLimits {
    double odd = 107;        // |f_odd| < odd * |z|
    double even_minus = 564; // |f_even^-| < even_minus * p^(-1/2)
    double inv_plus = 25;    // 1/|f_even^+| < inv_plus
};

struct LemmaWitness {
    std::int64_t p;
    std::complex<double> z;
    std::string bound;
    double ratio;
};

struct LemmaPrimeReport {
    std::int64_t p;
    std::size_t samples = 0;
    double max_odd_ratio = 0;        // max |f_odd| / |z|
    double max_even_minus_ratio = 0; // max |f_even^-| * p^(1/2)
    double max_inv_plus = 0;         // max 1/|f_even^+|
    double real_diameter_odd_max = 0;
};

struct LemmaReport {
    std::uint64_t seed = 0;
    std::vector<LemmaPrimeReport> primes;
    std::vector<LemmaWitness> failures;
    bool pass() const { return failures.empty(); }
};

/// Samples z with |z| <= p^(-1/2): uniform on the disk, an evenly spaced
/// boundary circle, the real diameter (endpoints included) and z = 0.
/// The f_odd bound is strict for z != 0 only; at 0 both sides vanish.
inline LemmaReport lemma_bound_suite(const std::vector<std::int64_t>& primes,
                                     std::size_t samples_per_prime, std::uint64_t seed,
                                     const LemmaLimits& lim = {})
{
    using cld = std::complex<long double>;
    LemmaReport rep;
    rep.seed = seed;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    for (std::int64_t p : primes) {
        const PPart pp = PPart::numeric(p);
        const ComplexEvaluator fo(pp.f_odd());
        const ComplexEvaluator fm(pp.f_even_minus());
        const ComplexEvaluator rp(ScaledFunction{pp.f_even_plus_reciprocal(), 0, p});
        const long double R = 1.0L / std::sqrt(static_cast<long double>(p));
        const long double sp = std::sqrt(static_cast<long double>(p));

        LemmaPrimeReport pr{p};
        auto check = [&](cld z, bool on_real) {
            ++pr.samples;
            const long double az = std::abs(z);
            const long double vm = std::abs(fm(z)) * sp;
            const long double vp = std::abs(rp(z));
            if (vm > pr.max_even_minus_ratio)
                pr.max_even_minus_ratio = static_cast<double>(vm);
            if (vp > pr.max_inv_plus)
                pr.max_inv_plus = static_cast<double>(vp);
            if (!(vm < lim.even_minus))
                rep.failures.push_back({p, std::complex<double>(z), "f_even_minus", static_cast<double>(vm)});
            if (!(vp < lim.inv_plus))
                rep.failures.push_back({p, std::complex<double>(z), "inv_f_even_plus", static_cast<double>(vp)});
            if (az > 0) {
                const long double vo = std::abs(fo(z)) / az;
                if (vo > pr.max_odd_ratio)
                    pr.max_odd_ratio = static_cast<double>(vo);
                if (on_real && vo > pr.real_diameter_odd_max)
                    pr.real_diameter_odd_max = static_cast<double>(vo);
                if (!(vo < lim.odd))
                    rep.failures.push_back({p, std::complex<double>(z), "f_odd", static_cast<double>(vo)});
            }
        };

        const std::size_t n_disk = samples_per_prime;
        const std::size_t n_ring = std::max<std::size_t>(64, samples_per_prime / 4);
        const std::size_t n_line = std::max<std::size_t>(65, samples_per_prime / 4) | 1;

        for (std::size_t i = 0; i < n_disk; ++i) {
            const long double r = R * std::sqrt(static_cast<long double>(unif(rng)));
            const long double th = 2 * std::numbers::pi_v<long double> * unif(rng);
            check(std::polar(r, th), false);
        }
        for (std::size_t i = 0; i < n_ring; ++i) {
            const long double th = 2 * std::numbers::pi_v<long double> * i / n_ring;
            check(std::polar(R, th), false);
        }
        for (std::size_t i = 0; i < n_line; ++i) {
            const long double x = -R + 2 * R * i / (n_line - 1);
            check(cld(x, 0), true);
        }
        check(cld(0, 0), true);
        rep.primes.push_back(pr);
    }
    return rep;
}

} // namespace qcubic::ratfun
