#include <gtest/gtest.h>

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <random>
#include <stdexcept>

#include "oracles/quadrature.hpp"
#include "qcubic/numeric.hpp"

using namespace qcubic::numeric;

TEST(BigReal, CertifiedDigitsAndPrinting)
{
    ScopedPrecision p(50);
    const BigReal third(Real(1) / 3, Real("1e-20"));
    EXPECT_EQ(third.certified_digits(), 19);
    EXPECT_EQ(third.str(), "3.333333333333333333e-01");
    const BigReal exact(Real(2), Real(0));
    EXPECT_EQ(exact.certified_digits(), 50);
    const BigReal vague(Real("0.5"), Real(1));
    EXPECT_EQ(vague.certified_digits(), 0);
    EXPECT_EQ(vague.str().substr(0, 5), "0 +- ");
    EXPECT_EQ(BigReal(Real(0), Real(0)).certified_digits(), 0);
}

TEST(BigReal, ErrorPropagationEnclosesTruth)
{
    ScopedPrecision p(50);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> U(-1, 1);
    for (int i = 0; i < 200; ++i) {
        const Real a = 1 + U(rng), b = 2 + U(rng);
        const Real ea = Real(1e-10) * (1 + U(rng)), eb = Real(1e-12) * (1 + U(rng));
        const BigReal A(a, ea), B(b, eb);
        // perturbed operands inside the error boxes
        const Real ta = a + ea * U(rng), tb = b + eb * U(rng);
        EXPECT_LE(abs((A * B).value - ta * tb), (A * B).err);
        EXPECT_LE(abs((A + B).value - (ta + tb)), (A + B).err);
        EXPECT_LE(abs((A - B).value - (ta - tb)), (A - B).err);
        EXPECT_LE(abs((A / B).value - ta / tb), (A / B).err);
        EXPECT_LE(abs(B.pow(5).value - pow(tb, 5)), B.pow(5).err);
    }
    EXPECT_THROW(BigReal(Real(1), Real(0)) / BigReal(Real("1e-3"), Real("1e-2")), std::domain_error);
}

TEST(Precision, ScopedRestores)
{
    const unsigned before = working_digits();
    {
        ScopedPrecision p(80);
        EXPECT_EQ(working_digits(), 80u);
        {
            ScopedPrecision q(30);
            EXPECT_EQ(working_digits(), 30u);
        }
        EXPECT_EQ(working_digits(), 80u);
    }
    EXPECT_EQ(working_digits(), before);
}

TEST(CompensatedSum, BeatsNaiveOnCancellation)
{
    CompensatedSum<double> s;
    double naive = 0;
    for (int i = 0; i < 1000; ++i) {
        for (double v : {1e16, 1.0, -1e16}) {
            s += v;
            naive += v;
        }
    }
    EXPECT_EQ(s.value(), 1000.0);
    EXPECT_NE(naive, 1000.0);

    CompensatedSum<double> h;
    long double ref = 0;
    for (int k = 1; k <= 100000; ++k) {
        h += 1.0 / k;
        ref += 1.0L / k;
    }
    EXPECT_NEAR(h.value(), static_cast<double>(ref), 2e-16 * 12.1);
}

TEST(Parallel, DeterministicSlotsAndErrors)
{
    auto f = [](std::size_t i) { return static_cast<long>(i * i) - 7; };
    const auto a = parallel_map<long>(1000, 1, f);
    const auto b = parallel_map<long>(1000, 4, f);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a[10], 93);
    EXPECT_TRUE(parallel_map<int>(0, 3, [](std::size_t) { return 1; }).empty());
    EXPECT_THROW(parallel_map<int>(50, 3,
                                   [](std::size_t i) {
                                       if (i == 17)
                                           throw std::runtime_error("boom");
                                       return 0;
                                   }),
                 std::runtime_error);
}

TEST(Parallel, SplitBlocksCover)
{
    for (std::size_t n : {0u, 1u, 7u, 100u})
        for (std::size_t k : {1u, 3u, 8u, 200u}) {
            const auto bl = split_blocks(n, k);
            ASSERT_FALSE(bl.empty());
            EXPECT_EQ(bl.front().first, 0u);
            EXPECT_EQ(bl.back().second, n);
            for (std::size_t i = 1; i < bl.size(); ++i)
                EXPECT_EQ(bl[i].first, bl[i - 1].second);
            EXPECT_LE(bl.size(), std::max<std::size_t>(n, 1));
        }
    EXPECT_GE(hardware_workers(), 1u);
}

TEST(Gamma, LogGammaAgainstBoost)
{
    for (double x : {0.1, 0.25, 0.5, 1.0, 2.5, 7.0, 33.3, 170.0})
        EXPECT_NEAR(lgamma_complex(cplx(x, 0)).real(), boost::math::lgamma(x), 1e-13 * std::max(1.0, std::fabs(boost::math::lgamma(x)))) << x;
    for (double x : {0.1, 0.25, 3.5, -0.5, -2.5})
        EXPECT_NEAR(gamma_real(x), boost::math::tgamma(x), 1e-13 * std::fabs(boost::math::tgamma(x))) << x;
    EXPECT_THROW(gamma_real(-3.0), std::domain_error);
    EXPECT_THROW(lgamma_complex(cplx(-2, 0)), std::domain_error);
}

TEST(Gamma, ComplexRecurrenceAndReflection)
{
    constexpr double pi = 3.14159265358979323846;
    for (cplx z : {cplx(0.25, 3), cplx(1.3, -7), cplx(-0.7, 2), cplx(0.5, 40)}) {
        // Gamma(z + 1) = z Gamma(z)
        const cplx r = gamma_complex(z + 1.0) / (z * gamma_complex(z));
        EXPECT_NEAR(std::abs(r - 1.0), 0.0, 1e-12) << z;
        // Gamma(z) Gamma(1 - z) = pi / sin(pi z)
        const cplx refl = gamma_complex(z) * gamma_complex(1.0 - z) * std::sin(pi * z) / pi;
        EXPECT_NEAR(std::abs(refl - 1.0), 0.0, 1e-12) << z;
    }
    // |Gamma(1/2 + it)|^2 = pi / cosh(pi t)
    for (double t : {1.0, 5.0, 20.0})
        EXPECT_NEAR(std::norm(gamma_complex(cplx(0.5, t))) * std::cosh(pi * t) / pi, 1.0, 1e-11) << t;
}

TEST(Gamma, IncompleteAgainstBoostAndQuadrature)
{
    for (double a : {0.25, 0.75, 1.0, 3.5})
        for (double x : {1e-6, 0.1, 0.9, 2.0, 10.0, 50.0}) {
            const double ref = boost::math::gamma_q(a, x);
            EXPECT_NEAR(gamma_q(a, x), ref, 1e-14 + 1e-12 * ref) << a << " " << x;
        }
    EXPECT_EQ(gamma_q(0.5, 0.0), 1.0);
    EXPECT_THROW(gamma_q(0.0, 1.0), std::domain_error);
    EXPECT_THROW(gamma_q(1.0, -1.0), std::domain_error);

    // Gamma(a, x) = int_x^inf u^(a-1) e^(-u) du, complex a
    for (cplx a : {cplx(0.25, 2), cplx(0.75, -5), cplx(1.5, 10)})
        for (double x : {0.5, 3.0}) {
            auto re = [&](double u) { return (std::pow(cplx(u, 0), a - 1.0) * std::exp(-u)).real(); };
            auto im = [&](double u) { return (std::pow(cplx(u, 0), a - 1.0) * std::exp(-u)).imag(); };
            const cplx ref(oracle::simpson_richardson<double>(re, x, x + 60, 40000),
                           oracle::simpson_richardson<double>(im, x, x + 60, 40000));
            EXPECT_NEAR(std::abs(gamma_upper(a, x) - ref), 0.0, 1e-10 * std::max(1.0, std::abs(ref))) << a << " " << x;
        }
    EXPECT_THROW(gamma_upper(cplx(1, 0), 0.0), std::domain_error);
}
