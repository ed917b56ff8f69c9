#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "qcubic/arith/factor.hpp"
#include "qcubic/ratfun/rational_function.hpp"

namespace qcubic::ratfun {

using Q = boost::multiprecision::mpq_rational;
using QPoly = Polynomial<Q>;
using QRF = RationalFunction<Q>;

/// rf * x^half_power with x = p^(-1/2). In formal mode x is absorbed into t,
/// so half_power is always 0 there.
struct ScaledFunction {
    QRF rf;
    int half_power = 0;
    std::int64_t p = 0;

    long double scale() const
    {
        return half_power == 0 ? 1.0L
                               : std::pow(static_cast<long double>(p), -0.5L * half_power);
    }

    const QRF& exact() const
    {
        if (half_power != 0)
            throw std::logic_error("ScaledFunction: value carries an irrational p^(-1/2) factor");
        return rf;
    }

    /// k-th Taylor coefficient as an extended real.
    long double coefficient(std::size_t k) const
    {
        return scale() * rf.coefficient(k).convert_to<long double>();
    }
};

/// rf evaluated through double-rounded coefficients; cheap for sampling.
class ComplexEvaluator {
public:
    ComplexEvaluator() = default;
    explicit ComplexEvaluator(const ScaledFunction& f) : scale_(f.scale())
    {
        for (const auto& c : f.rf.numerator().coefficients())
            num_.push_back(c.convert_to<long double>());
        for (const auto& c : f.rf.denominator().coefficients())
            den_.push_back(c.convert_to<long double>());
    }

    std::complex<long double> operator()(std::complex<long double> z) const
    {
        return scale_ * horner(num_, z) / horner(den_, z);
    }

private:
    static std::complex<long double> horner(const std::vector<long double>& c,
                                            std::complex<long double> z)
    {
        std::complex<long double> acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it)
            acc = acc * z + *it;
        return acc;
    }

    long double scale_ = 1;
    std::vector<long double> num_, den_;
};

/// Diagonal p-part data. numeric(p): variable z, p a fixed odd prime.
/// formal(): variable t with z = t^3, x = p^(-1/2) = t^2, p = t^(-4).
class PPart {
public:
    static PPart numeric(std::int64_t p)
    {
        if (p < 3 || (p & 1) == 0 || !arith::is_prime(static_cast<std::uint64_t>(p)))
            throw std::invalid_argument("PPart: p = " + std::to_string(p) +
                                        " is not an odd prime");
        PPart r;
        r.p_ = p;
        r.z_ = QRF::variable();
        r.pinv_ = QRF(Q(1, p));
        return r;
    }

    static PPart formal()
    {
        PPart r;
        r.p_ = 0;
        const QRF t = QRF::variable();
        r.z_ = t.pow(3);
        r.pinv_ = t.pow(4);
        r.x_ = t.pow(2);
        return r;
    }

    bool is_formal() const { return p_ == 0; }
    std::int64_t prime() const { return p_; }
    const QRF& z() const { return z_; }
    QRF p() const { return pinv_.inverse(); }
    const QRF& pinv() const { return pinv_; }

    ScaledFunction f_odd() const
    {
        const QRF one(Q(1));
        const QRF z2 = z_ * z_;
        const QRF z4 = z2 * z2;
        const QRF z6 = z4 * z2;
        const QRF num = z_ * (one + QRF(Q(7)) * z2 + QRF(Q(7)) * z4 + z6);
        const QRF den = (one - z2).pow(7) * (one - p() * z4);
        return wrap(num / den, 0);
    }

    /// Carries one factor p^(-1/2) (half_power 1 in numeric mode).
    ScaledFunction f_even_minus() const { return wrap(even_minus_core(), 1); }

    QRF f_even_plus_reciprocal() const
    {
        const QRF one(Q(1));
        const QRF a = pinv_;
        const QRF a2 = a * a;
        const QRF a3 = a2 * a;
        const QRF z2 = z_ * z_;
        const QRF z4 = z2 * z2;
        const QRF z6 = z4 * z2;
        const QRF z8 = z4 * z4;
        auto k = [](long v) { return QRF(Q(v)); };
        const QRF poly = (one + k(3) * a)
                       + (k(7) - k(15) * a + a2 - a3) * z2
                       + (k(7) - k(35) * a + k(35) * a2 - k(7) * a3) * z4
                       + (one - a + k(15) * a2 - k(7) * a3) * z6
                       - (k(3) * a2 + a3) * z8;
        const QRF lead = (one - a).pow(3) * (one - z2).pow(7) * (one - p() * z4);
        return lead / poly;
    }

    ScaledFunction f_even_plus() const { return wrap(f_even_plus_reciprocal().inverse(), 0); }

    /// (f_odd - z) / z^3
    ScaledFunction F() const
    {
        return wrap((f_odd().rf - z_) / z_.pow(3), 0);
    }

    /// (f_even^- - x(3+x^2)/(1-x^2)^3) / z^2
    ScaledFunction G1() const
    {
        const QRF one(Q(1));
        const QRF mass = (QRF(Q(3)) + pinv_) / (one - pinv_).pow(3);
        return wrap((even_minus_core() - mass) / z_.pow(2), 1);
    }

    /// (f_even^+ - (1+3x^2)/(1-x^2)^3) / z^2
    ScaledFunction G0() const
    {
        const QRF one(Q(1));
        const QRF mass = (one + QRF(Q(3)) * pinv_) / (one - pinv_).pow(3);
        return wrap((f_even_plus().rf - mass) / z_.pow(2), 0);
    }

private:
    // f_even^- without its p^(-1/2) prefactor
    QRF even_minus_core() const
    {
        const QRF one(Q(1));
        auto k = [](long v) { return QRF(Q(v)); };
        const QRF a = pinv_;
        const QRF a2 = a * a;
        const QRF z2 = z_ * z_;
        const QRF z4 = z2 * z2;
        const QRF z6 = z4 * z2;
        const QRF num = (k(3) + a)
                      + (k(10) - k(17) * a + k(3) * a2) * z2
                      + (k(3) - k(17) * a + k(10) * a2) * z4
                      + (a + k(3) * a2) * z6;
        const QRF den = (one - a).pow(3) * (one - z2).pow(6) * (one - p() * z4);
        return num / den;
    }

    ScaledFunction wrap(QRF rf, int half_power) const
    {
        if (is_formal() && half_power != 0)
            return ScaledFunction{rf * x_.pow(half_power), 0, 0};
        return ScaledFunction{std::move(rf), half_power, p_};
    }

    std::int64_t p_ = 0;
    QRF z_, pinv_, x_;
};

} // namespace qcubic::ratfun
