#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcubic::ratfun {

/// Dense univariate polynomial over a field T, coefficients ascending.
/// The zero polynomial has no coefficients; otherwise the top one is nonzero.
template <class T>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(T c) : c_{std::move(c)} { trim(); }
    Polynomial(std::initializer_list<T> cs) : c_(cs) { trim(); }
    explicit Polynomial(std::vector<T> cs) : c_(std::move(cs)) { trim(); }

    static Polynomial monomial(T c, std::size_t k)
    {
        std::vector<T> v(k + 1, T(0));
        v[k] = std::move(c);
        return Polynomial(std::move(v));
    }

    static Polynomial x() { return monomial(T(1), 1); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<T>& coefficients() const { return c_; }

    T operator[](std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
    const T& leading() const { return c_.back(); }

    /// Lowest index with nonzero coefficient; -1 for zero.
    int valuation() const
    {
        for (std::size_t k = 0; k < c_.size(); ++k)
            if (c_[k] != 0)
                return static_cast<int>(k);
        return -1;
    }

    template <class U>
    U eval(const U& z) const
    {
        U acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * z + U(*it);
        return acc;
    }

    Polynomial derivative() const
    {
        if (c_.size() <= 1)
            return {};
        std::vector<T> v(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k)
            v[k - 1] = c_[k] * T(static_cast<long>(k));
        return Polynomial(std::move(v));
    }

    /// p(x^k)
    Polynomial inflate(std::size_t k) const
    {
        if (is_zero())
            return {};
        std::vector<T> v((c_.size() - 1) * k + 1, T(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            v[i * k] = c_[i];
        return Polynomial(std::move(v));
    }

    Polynomial shifted(std::size_t k) const
    {
        if (is_zero())
            return {};
        std::vector<T> v(k, T(0));
        v.insert(v.end(), c_.begin(), c_.end());
        return Polynomial(std::move(v));
    }

    Polynomial monic() const
    {
        if (is_zero())
            return {};
        Polynomial r = *this;
        const T lc = leading();
        for (auto& a : r.c_)
            a /= lc;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), T(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k)
            c_[k] += o.c_[k];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), T(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k)
            c_[k] -= o.c_[k];
        trim();
        return *this;
    }

    Polynomial& operator*=(const Polynomial& o)
    {
        *this = *this * o;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a)
    {
        for (auto& c : a.c_)
            c = -c;
        return a;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<T> v(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                v[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(v));
    }

    friend Polynomial operator*(Polynomial a, const T& s)
    {
        if (s == 0)
            return {};
        for (auto& c : a.c_)
            c *= s;
        return a;
    }

    Polynomial pow(unsigned e) const
    {
        Polynomial r(T(1)), b = *this;
        while (e) {
            if (e & 1)
                r = r * b;
            e >>= 1;
            if (e)
                b = b * b;
        }
        return r;
    }

    /// Euclidean division: *this = q*d + r with deg r < deg d.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const
    {
        if (d.is_zero())
            throw std::domain_error("Polynomial: division by zero polynomial");
        if (degree() < d.degree())
            return {Polynomial{}, *this};
        std::vector<T> r = c_;
        const std::size_t dn = d.c_.size();
        std::vector<T> q(c_.size() - dn + 1, T(0));
        const T lc = d.leading();
        for (std::size_t k = q.size(); k-- > 0;) {
            const T f = r[k + dn - 1] / lc;
            q[k] = f;
            if (f == 0)
                continue;
            for (std::size_t j = 0; j < dn; ++j)
                r[k + j] -= f * d.c_[j];
        }
        r.resize(dn - 1);
        return {Polynomial(std::move(q)), Polynomial(std::move(r))};
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::string str(const std::string& var = "z") const
    {
        if (is_zero())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] == 0)
                continue;
            if (!first)
                os << " + ";
            first = false;
            os << "(" << c_[k] << ")";
            if (k == 1)
                os << "*" << var;
            else if (k > 1)
                os << "*" << var << "^" << k;
        }
        return os.str();
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<T> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
template <class T>
Polynomial<T> gcd(Polynomial<T> a, Polynomial<T> b)
{
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Polynomial<T>& p)
{
    return os << p.str();
}

} // namespace qcubic::ratfun
