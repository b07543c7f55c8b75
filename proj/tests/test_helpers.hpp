#pragma once

#include <cmath>
#include <cstddef>
#include <functional>

namespace testutil {

/// Independent quadrature oracle: composite midpoint Riemann sum. Kept free
/// of any adaptive machinery so it can cross-check the real integrator.
inline double riemann_midpoint(const std::function<double(double)>& f,
                               double a, double b, std::size_t panels) {
    const double h = (b - a) / static_cast<double>(panels);
    double sum = 0.0;
    for (std::size_t i = 0; i < panels; ++i)
        sum += f(a + (static_cast<double>(i) + 0.5) * h);
    return sum * h;
}

}  // namespace testutil
