#pragma once

#include <boost/multiprecision/mpfr.hpp>

namespace qcubic::numeric {

using Real = boost::multiprecision::mpfr_float;

/// Sets the process-wide MPFR default precision for its lifetime.
/// Construct on the main thread before any worker starts; workers must not
/// change precision.
class ScopedPrecision {
public:
    explicit ScopedPrecision(unsigned digits) : saved_(Real::default_precision())
    {
        Real::default_precision(digits);
    }
    ~ScopedPrecision() { Real::default_precision(saved_); }
    ScopedPrecision(const ScopedPrecision&) = delete;
    ScopedPrecision& operator=(const ScopedPrecision&) = delete;

private:
    unsigned saved_;
};

inline unsigned working_digits() { return Real::default_precision(); }

/// 10^(-digits) at the current precision, a unit for roundoff budgets.
inline Real ulp_budget()
{
    return boost::multiprecision::pow(Real(10), -static_cast<int>(working_digits()) + 2);
}

} // namespace qcubic::numeric
