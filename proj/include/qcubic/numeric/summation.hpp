#pragma once

#include <cmath>

namespace qcubic::numeric {

/// Neumaier's variant of Kahan summation.
template <class T>
class CompensatedSum {
public:
    void add(T x)
    {
        const T t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    CompensatedSum& operator+=(T x)
    {
        add(x);
        return *this;
    }

    T value() const { return sum_ + comp_; }

private:
    T sum_ = 0;
    T comp_ = 0;
};

} // namespace qcubic::numeric
