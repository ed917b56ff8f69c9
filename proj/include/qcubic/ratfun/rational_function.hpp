#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qcubic/ratfun/polynomial.hpp"

namespace qcubic::ratfun {

/// num/den in lowest terms with den monic. Zero is 0/1.
template <class T>
class RationalFunction {
public:
    using Poly = Polynomial<T>;

    RationalFunction() : num_(), den_(T(1)) {}
    RationalFunction(T c) : num_(std::move(c)), den_(T(1)) {}
    RationalFunction(Poly n) : num_(std::move(n)), den_(T(1)) {}
    RationalFunction(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    static RationalFunction variable() { return RationalFunction(Poly::x()); }

    const Poly& numerator() const { return num_; }
    const Poly& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    template <class U>
    U eval(const U& z) const
    {
        const U d = den_.eval(z);
        if (d == U(0))
            throw std::domain_error("RationalFunction: pole at evaluation point");
        return num_.eval(z) / d;
    }

    /// First n Taylor coefficients at 0 (exact power-series division).
    std::vector<T> series_coefficients(std::size_t n) const
    {
        const T d0 = den_[0];
        if (d0 == 0)
            throw std::domain_error("series_coefficients: pole at 0");
        std::vector<T> out(n, T(0));
        for (std::size_t k = 0; k < n; ++k) {
            T acc = num_[k];
            const std::size_t top = std::min<std::size_t>(k, den_.coefficients().size() - 1);
            for (std::size_t j = 1; j <= top; ++j)
                acc -= den_[j] * out[k - j];
            out[k] = acc / d0;
        }
        return out;
    }

    T coefficient(std::size_t k) const { return series_coefficients(k + 1)[k]; }

    RationalFunction inverse() const
    {
        if (is_zero())
            throw std::domain_error("RationalFunction: inverse of zero");
        return RationalFunction(den_, num_);
    }

    RationalFunction pow(int e) const
    {
        if (e < 0)
            return inverse().pow(-e);
        RationalFunction r(T(1));
        r.num_ = num_.pow(static_cast<unsigned>(e));
        r.den_ = den_.pow(static_cast<unsigned>(e));
        return r;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
    {
        if (a.den_ == b.den_)
            return RationalFunction(a.num_ + b.num_, a.den_);
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b)
    {
        if (a.den_ == b.den_)
            return RationalFunction(a.num_ - b.num_, a.den_);
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }

    friend RationalFunction operator-(const RationalFunction& a)
    {
        RationalFunction r = a;
        r.num_ = -r.num_;
        return r;
    }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
    {
        // cross-cancel first to keep the gcd small
        const Poly g1 = gcd(a.num_, b.den_);
        const Poly g2 = gcd(b.num_, a.den_);
        auto q = [](const Poly& p, const Poly& g) {
            return g.is_zero() || g.degree() == 0 ? p : p.divmod(g).first;
        };
        RationalFunction r;
        r.num_ = q(a.num_, g1) * q(b.num_, g2);
        r.den_ = q(a.den_, g2) * q(b.den_, g1);
        r.normalize();
        return r;
    }

    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b)
    {
        if (b.is_zero())
            throw std::domain_error("RationalFunction: division by zero function");
        return a * b.inverse();
    }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    std::string str(const std::string& var = "z") const
    {
        if (den_.degree() == 0)
            return num_.str(var);
        return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
    }

private:
    void reduce()
    {
        if (den_.is_zero())
            throw std::domain_error("RationalFunction: zero denominator");
        if (num_.is_zero()) {
            den_ = Poly(T(1));
            return;
        }
        const Poly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divmod(g).first;
            den_ = den_.divmod(g).first;
        }
        normalize();
    }

    void normalize()
    {
        if (num_.is_zero()) {
            den_ = Poly(T(1));
            return;
        }
        const T lc = den_.leading();
        if (lc != 1) {
            T inv = T(1) / lc;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    Poly num_;
    Poly den_;
};

} // namespace qcubic::ratfun
