#include <gtest/gtest.h>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <algorithm>
#include <chrono>

#include "oracles/agm.hpp"
#include "oracles/series.hpp"
#include "qcubic/arith.hpp"
#include "qcubic/constants.hpp"

using namespace qcubic;
using namespace qcubic::constants;
using numeric::Real;

namespace {

class Constants : public ::testing::Test {
protected:
    numeric::ScopedPrecision prec{50};
};

Real poly_at(const std::vector<long>& c, const Real& x)
{
    Real acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

// (1-x)^8 (1+x)^e * q(x)
Real line(int e, const std::vector<long>& q, const Real& x)
{
    return pow(1 - x, 8) * pow(1 + x, e) * poly_at(q, x);
}

} // namespace

TEST_F(Constants, ZetaHalfAgainstAcceleratedEta)
{
    const BigReal z = zeta_real(Real(0.5));
    Real ref;
    {
        numeric::ScopedPrecision hi(70);
        ref = oracle::zeta_borwein(Real(0.5), 100);
    }
    EXPECT_GE(z.certified_digits(), 45);
    EXPECT_LE(abs(z.value - ref), z.err);
    EXPECT_EQ(z.value.str(11, std::ios_base::fixed).substr(0, 13), "-1.4603545088");
}

TEST_F(Constants, ZetaIndependentTermCount)
{
    // the Euler-Maclaurin cutoffs scale with precision, so 50 and 80 digits use different N, M
    for (double s : {0.5, 0.25, 1.5, 3.0, -0.5, -3.5}) {
        const BigReal lo = zeta_real(Real(s));
        Real hi;
        {
            numeric::ScopedPrecision p(80);
            hi = zeta_real(Real(s)).value;
        }
        EXPECT_LE(abs(lo.value - hi), lo.err) << s;
        EXPECT_GT(lo.certified_digits(), 40) << s;
    }
}

TEST_F(Constants, ZetaKnownValuesAndBoost)
{
    const Real pi = boost::math::constants::pi<Real>();
    const BigReal z2 = zeta_real(Real(2));
    EXPECT_LE(abs(z2.value - pi * pi / 6), z2.err);
    const BigReal z4 = zeta_real(Real(4));
    EXPECT_LE(abs(z4.value - pow(pi, 4) / 90), z4.err);
    const BigReal zm1 = zeta_real(Real(-1));
    EXPECT_LE(abs(zm1.value + Real(1) / 12), zm1.err + Real(1e-48));
    for (double s : {0.3, 0.75, 2.5, 7.0}) {
        const BigReal z = zeta_real(Real(s));
        const Real b = boost::math::zeta(Real(s));
        EXPECT_LE(abs(z.value - b), z.err + abs(b) * Real(1e-45)) << s;
    }
    EXPECT_THROW(zeta_real(Real(1)), std::domain_error);
}

TEST_F(Constants, GammaQuarterTwoMethods)
{
    const BigReal g = gamma_real(Real(0.25));
    const Real agm = oracle::gamma_quarter_agm();
    EXPECT_LT(abs(g.value - agm), Real(1e-40));
    EXPECT_LE(abs(g.value - agm), g.err + Real(1e-48));
    EXPECT_EQ(g.value.str(11, std::ios_base::fixed), "3.62560990822");
    const BigReal g4 = g.pow(4);
    EXPECT_NEAR(g4.to_double(), 172.7925, 1e-3);
    EXPECT_LE(abs(g4.value - pow(agm, 4)), g4.err + Real(1e-45));
}

TEST_F(Constants, GammaAgainstBoost)
{
    for (double x : {0.5, 0.75, 1.0, 3.3, 10.0, 27.5}) {
        const BigReal g = gamma_real(Real(x));
        const Real b = boost::math::tgamma(Real(x));
        EXPECT_LE(abs(g.value - b), g.err + abs(b) * Real(1e-45)) << x;
    }
    const Real pi = boost::math::constants::pi<Real>();
    const BigReal gh = gamma_real(Real(0.5));
    EXPECT_LE(abs(gh.value - sqrt(pi)), gh.err);
    EXPECT_THROW(gamma_real(Real(0)), std::domain_error);
    EXPECT_THROW(gamma_real(Real(-2)), std::domain_error);
}

TEST_F(Constants, PrimeZetaAgainstDirectSum)
{
    // sum over p <= 10^5 plus the integral tail for s = 4 and s = 3
    const auto primes = arith::primes_up_to(100000);
    for (int s : {3, 4}) {
        Real direct = 0;
        for (auto p : primes)
            direct += pow(Real(p), -s);
        const Real tail = pow(Real(100000), 1 - s) / (s - 1);
        const BigReal pz = prime_zeta(Real(s));
        EXPECT_GE(pz.value, direct - pz.err) << s;
        EXPECT_LE(pz.value, direct + tail + pz.err) << s;
    }
    const BigReal p2 = prime_zeta(Real(2));
    EXPECT_LT(abs(p2.value - Real("0.452247420041065498506543364832247934173231343")), Real(1e-44));
    EXPECT_GT(p2.certified_digits(), 40);
    EXPECT_THROW(prime_zeta(Real(1)), std::domain_error);
}

TEST_F(Constants, BigRealStringAndErrors)
{
    const BigReal z = zeta_real(Real(0.5));
    const std::string s = z.str();
    const auto mant = s.substr(0, s.find('e'));
    const auto digits = std::count_if(mant.begin(), mant.end(), [](char c) { return c >= '0' && c <= '9'; });
    EXPECT_EQ(digits, z.certified_digits());
    EXPECT_TRUE(z.err > 0);
}

TEST_F(Constants, LogSeriesOfP)
{
    const auto P = ratfun::p_polynomial();
    const auto a = log_series(P, 16);
    EXPECT_EQ(a[1], 0);
    EXPECT_EQ(a[2], 0);
    EXPECT_EQ(a[3], -14);
    EXPECT_EQ(a[4], -1);
    EXPECT_EQ(a[6], -182);

    // log(1 + u) = sum (-1)^(k+1) u^k / k with u = P - 1, by rational convolution
    std::vector<ratfun::Q> u(17, ratfun::Q(0));
    for (std::size_t k = 1; k <= 16 && static_cast<int>(k) <= P.degree(); ++k)
        u[k] = P[k];
    std::vector<ratfun::Q> pw = u, acc(17, ratfun::Q(0));
    for (int k = 1; k <= 16; ++k) {
        for (int j = 0; j <= 16; ++j)
            acc[j] += (k % 2 ? ratfun::Q(1) : ratfun::Q(-1)) * pw[j] / ratfun::Q(k);
        pw = oracle::convolve(pw, u, 17);
    }
    for (int j = 1; j <= 16; ++j)
        EXPECT_EQ(a[j], acc[j]) << j;

    ratfun::QPoly bad({ratfun::Q(2), ratfun::Q(1)});
    EXPECT_THROW(log_series(bad, 4), std::invalid_argument);
}

TEST_F(Constants, PrefactorComposition)
{
    const BigReal pf = theorem_a_prefactor();
    const Real pi = boost::math::constants::pi<Real>();
    const Real root2 = sqrt(Real(2));
    EXPECT_NEAR((Real(9) / (256 * pi)).convert_to<double>(), 0.0111905819, 1e-10);
    EXPECT_NEAR(pow(Real(2), Real(0.25)).convert_to<double>(), 1.18920712, 1e-8);
    EXPECT_NEAR((128 * root2 - 181).convert_to<double>(), 0.019335984, 1e-9);
    const Real z = oracle::zeta_borwein(Real(0.5), 90);
    const Real ref = Real(9) / (256 * pi) * pow(Real(2), Real(0.25)) * (128 * root2 - 181) *
                     pow(oracle::gamma_quarter_agm(), 4) * pow(z, 7);
    EXPECT_NEAR(pow(z, 7).convert_to<double>(), -14.1647, 1e-4);
    EXPECT_LE(abs(pf.value - ref), pf.err + Real(1e-44));
    EXPECT_NEAR(pf.to_double(), -0.630, 5e-4);
    EXPECT_GT(pf.certified_digits(), 38);
}

TEST_F(Constants, TheoremAValue)
{
    const auto t0 = std::chrono::steady_clock::now();
    const BigReal v = theorem_a_residue(10000, 12, numeric::hardware_workers());
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    EXPECT_LE(std::fabs(v.to_double() + 0.0034), 2e-4);
    EXPECT_LE(v.err, Real(1e-4));
    EXPECT_LT(secs, 60);
    const BigReal w = theorem_a_residue(100000, 12);
    EXPECT_LT(abs(w.value - v.value), v.err);
    EXPECT_LE(abs(w.value - v.value), v.err + w.err);
}

TEST_F(Constants, TheoremAAgainstDirectProduct)
{
    // product over odd p <= 2*10^6 in extended precision, with the j = 3 tail
    // term estimated from a short direct sum; error dominated by x^4 terms.
    const auto primes = arith::primes_up_to(2000000);
    const auto P = ratfun::p_polynomial();
    Real prod = 1;
    for (auto p : primes)
        if (p > 2)
            prod *= eval_poly(P, 1 / sqrt(Real(p)));
    const Real direct = theorem_a_prefactor().value * prod;
    const BigReal v = theorem_a_residue(10000, 16);
    // remaining log tail is about -14 sum_{p > 2e6} p^(-3/2), roughly 1.4e-3 relative
    const Real rel = abs(direct / v.value - 1);
    EXPECT_LT(rel, Real(3e-3));
    EXPECT_GT(rel, Real(3e-4));
    EXPECT_GT(direct / v.value, 1) << "truncated product must be larger in magnitude";
}

TEST_F(Constants, TheoremABreakdownConsistent)
{
    const auto br = theorem_a_breakdown(10000, 12);
    const BigReal base = prop_residue({1, 1, 1});
    EXPECT_LE(abs(base.value - br.prefactor.value), base.err + br.prefactor.err);
    const Real recon = base.value * br.product.value * exp(br.log_tail.value);
    EXPECT_LE(abs(recon - br.value.value), br.value.err + base.err);
    EXPECT_LT(br.truncation_bound, Real(1e-15));
}

TEST_F(Constants, TheoremAErrMonotone)
{
    for (std::uint64_t P : {100u, 1000u, 10000u}) {
        Real prev = -1;
        for (int J = 3; J <= 16; ++J) {
            const Real e = theorem_a_breakdown(P, J).value.err;
            if (prev >= 0) {
                EXPECT_LE(e, prev) << P << " " << J;
            }
            prev = e;
        }
    }
    for (int J : {3, 8, 12, 16}) {
        Real prev = -1;
        for (std::uint64_t P : {100u, 300u, 1000u, 3000u, 10000u}) {
            const Real e = theorem_a_breakdown(P, J).value.err;
            if (prev >= 0) {
                EXPECT_LE(e, prev) << P << " " << J;
            }
            prev = e;
        }
    }
}

TEST_F(Constants, TheoremAReproducibleAcrossWorkers)
{
    const BigReal a = theorem_a_residue(5000, 12, 1);
    const BigReal b = theorem_a_residue(5000, 12, 4);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.err, b.err);
}

TEST_F(Constants, TheoremARejectsBadParameters)
{
    EXPECT_THROW(theorem_a_residue(99, 12), std::invalid_argument);
    EXPECT_THROW(theorem_a_residue(10000, 2), std::invalid_argument);
    EXPECT_THROW(theorem_a_residue(10000, 17), std::invalid_argument);
}

TEST_F(Constants, PropResidueLineRatio)
{
    for (std::uint64_t q : {3u, 5u, 7u, 101u}) {
        const Real x = 1 / sqrt(Real(q));
        const BigReal r = prop_residue({q, 1, 1}) / prop_residue({1, 1, q});
        const Real expect = pow(Real(q), Real(-0.25)) * (1 + x) * (1 + 6 * x + x * x) /
                            poly_at({1, 7, 13, 7, 1}, x);
        EXPECT_LE(abs(r.value - expect), r.err + abs(expect) * Real(1e-40)) << q;
    }
}

TEST_F(Constants, PropResidueJacobiSignAndLines)
{
    const BigReal base = prop_residue({1, 1, 1});
    // c2 line carries (2 c1 / c2) and c2^(-1/2)
    for (std::uint64_t q : {3u, 5u, 7u, 11u, 13u}) {
        const Real x = 1 / sqrt(Real(q));
        const int sign = (q % 8 == 1 || q % 8 == 7) ? 1 : -1;
        const Real expect = sign * x * line(1, {3, 7, 3}, x);
        const BigReal r = prop_residue({1, q, 1}) / base;
        EXPECT_LE(abs(r.value - expect), r.err + Real(1e-40)) << q;
    }
    // (2 c1 / c2) with c1 = 3, c2 = 5: (6/5) = (1/5) = 1
    const Real x3 = 1 / sqrt(Real(3)), x5 = 1 / sqrt(Real(5));
    const Real e35 = pow(Real(3), Real(-0.25)) * line(2, {1, 6, 1}, x3) * x5 * line(1, {3, 7, 3}, x5);
    const BigReal r35 = prop_residue({3, 5, 1}) / base;
    EXPECT_LE(abs(r35.value - e35), r35.err + Real(1e-40));
    // c1 = 5, c2 = 3: (10/3) = (1/3) = 1; c1 = 7, c2 = 3: (14/3) = (2/3) = -1
    EXPECT_GT(prop_residue({5, 3, 1}).value * base.value, 0);
    EXPECT_LT(prop_residue({7, 3, 1}).value * base.value, 0);
}

TEST_F(Constants, PropResidueMultiplicative)
{
    const BigReal base = prop_residue({1, 1, 1});
    for (auto [q, r] : {std::pair<std::uint64_t, std::uint64_t>{3, 5}, {7, 11}, {5, 13}}) {
        const BigReal fq = prop_residue({1, 1, q}) / base;
        const BigReal fr = prop_residue({1, 1, r}) / base;
        const BigReal fqr = prop_residue({1, 1, q * r}) / base;
        const BigReal prod = fq * fr;
        EXPECT_LE(abs(fqr.value - prod.value), fqr.err + prod.err) << q << "*" << r;
        const Real xq = 1 / sqrt(Real(q));
        EXPECT_LE(abs(fq.value - line(1, {1, 7, 13, 7, 1}, xq)), fq.err + Real(1e-40));
    }
}

TEST_F(Constants, PropResidueValidation)
{
    EXPECT_THROW(prop_residue({2, 1, 1}), std::invalid_argument);
    EXPECT_THROW(prop_residue({9, 1, 1}), std::invalid_argument);
    EXPECT_THROW(prop_residue({3, 3, 1}), std::invalid_argument);
    EXPECT_THROW(prop_residue({15, 1, 5}), std::invalid_argument);
    EXPECT_THROW(prop_residue({0, 1, 1}), std::invalid_argument);
    EXPECT_NO_THROW(prop_residue({3, 5, 7}));
}

TEST_F(Constants, RcResidue)
{
    const Real q = Real(1) / 4;
    const BigReal r1 = r_c_residue(q, q, q, 1);
    const Real zh = oracle::zeta_borwein(Real(0.5), 90);
    const Real expect = pow(zh * (1 - 1 / sqrt(Real(2))), 7) / 2;
    EXPECT_LE(abs(r1.value - expect), r1.err + Real(1e-45));

    const BigReal r15 = r_c_residue(q, q, q, 15) / r1;
    Real ratio = 1;
    for (int p : {3, 5})
        ratio *= (1 - Real(1) / p) * pow(1 - 1 / sqrt(Real(p)), 7);
    EXPECT_LE(abs(r15.value - ratio), r15.err + Real(1e-45));

    // generic point: direct product of seven zeta values
    const Real s1 = Real(0.3), s2 = Real(0.6), s3 = Real(0.45);
    const BigReal g = r_c_residue(s1, s2, s3, 3);
    Real d = (1 - Real(1) / 2) * (1 - Real(1) / 3);
    for (const Real& w : {Real(2 * s1), Real(2 * s2), Real(2 * s3), Real(s1 + s2), Real(s1 + s3),
                          Real(s2 + s3), Real(2 * (s1 + s2 + s3) - 1)})
        d *= boost::math::zeta(w) * (1 - pow(Real(2), -w)) * (1 - pow(Real(3), -w));
    EXPECT_LE(abs(g.value - d), g.err + abs(d) * Real(1e-44));

    EXPECT_THROW(r_c_residue(Real(0.5), q, q, 1), std::domain_error);
    EXPECT_THROW(r_c_residue(Real(0.75), q, Real(0.1), 1), std::domain_error);
    EXPECT_THROW(r_c_residue(Real(0.125), Real(0.25), Real(0.625), 1), std::domain_error);
    EXPECT_THROW(r_c_residue(q, q, q, 6), std::invalid_argument);
    EXPECT_THROW(r_c_residue(q, q, q, 9), std::invalid_argument);
}

TEST_F(Constants, JsonReport)
{
    const BigReal v = theorem_a_residue(1000, 12);
    const auto j = constant_json("theorem_a_residue", v, {{"prime_limit", 1000}, {"tail_order", 12}});
    EXPECT_EQ(j["name"], "theorem_a_residue");
    EXPECT_EQ(j["value"].get<std::string>(), v.str());
    EXPECT_NEAR(j["value_double"].get<double>(), -0.0034179, 1e-6);
    EXPECT_EQ(j["parameters"]["prime_limit"], 1000);
    EXPECT_TRUE(j.contains("err"));
}
