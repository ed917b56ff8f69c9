#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "qcubic/numeric/precision.hpp"

namespace qcubic::numeric {

/// Extended-precision value with an absolute error bound.
struct BigReal {
    Real value;
    Real err;

    BigReal() : value(0), err(0) {}
    BigReal(Real v, Real e) : value(std::move(v)), err(std::move(e)) {}

    /// Significant decimal digits guaranteed by err (capped by precision).
    int certified_digits() const
    {
        const int cap = static_cast<int>(working_digits());
        if (value == 0)
            return 0;
        if (err == 0)
            return cap;
        const Real rel = err / abs(value);
        if (rel >= 1)
            return 0;
        const int d = static_cast<int>(
            boost::multiprecision::floor(-boost::multiprecision::log10(rel)).convert_to<long>());
        return std::clamp(d, 0, cap);
    }

    /// Never prints more digits than certified_digits().
    std::string str() const
    {
        const int d = certified_digits();
        std::ostringstream os;
        if (d == 0) {
            os << "0 +- " << err.str(3, std::ios_base::scientific);
            return os.str();
        }
        os << value.str(d - 1, std::ios_base::scientific);
        return os.str();
    }

    double to_double() const { return value.convert_to<double>(); }

    friend BigReal operator*(const BigReal& a, const BigReal& b)
    {
        return {a.value * b.value, abs(a.value) * b.err + abs(b.value) * a.err + a.err * b.err};
    }
    friend BigReal operator+(const BigReal& a, const BigReal& b)
    {
        return {a.value + b.value, a.err + b.err};
    }
    friend BigReal operator-(const BigReal& a, const BigReal& b)
    {
        return {a.value - b.value, a.err + b.err};
    }
    friend BigReal operator/(const BigReal& a, const BigReal& b)
    {
        // |a/b - A/B| <= (|a| eb + |b| ea) / (|b| (|b| - eb)) for eb < |b|
        const Real ab = abs(b.value);
        if (b.err >= ab)
            throw std::domain_error("BigReal: divisor not bounded away from zero");
        return {a.value / b.value, (abs(a.value) * b.err + ab * a.err) / (ab * (ab - b.err))};
    }
    BigReal pow(unsigned k) const
    {
        BigReal r(Real(1), Real(0));
        for (unsigned i = 0; i < k; ++i)
            r = r * *this;
        return r;
    }
};

} // namespace qcubic::numeric
