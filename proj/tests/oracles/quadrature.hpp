#pragma once

// Composite Simpson with one Richardson step; used only as a reference.

#include <cmath>
#include <functional>

namespace oracle {

template <class T, class F>
T simpson(F f, double a, double b, int n)
{
    if (n % 2)
        ++n;
    const double h = (b - a) / n;
    T s = f(a) + f(b);
    for (int i = 1; i < n; ++i)
        s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    return s * (h / 3);
}

template <class T, class F>
T simpson_richardson(F f, double a, double b, int n)
{
    const T coarse = simpson<T>(f, a, b, n);
    const T fine = simpson<T>(f, a, b, 2 * n);
    return fine + (fine - coarse) / 15.0;
}

} // namespace oracle
