#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "dmetric/errors.hpp"

namespace dmetric::quadrature {

inline constexpr double kDefaultAbsTol = 1e-10;
inline constexpr double kDefaultRelTol = 1e-10;
inline constexpr int kMaxDepth = 60;

/// A 1-D integrand over an angle interval. Breakpoints mark angles where the
/// integrand is continuous but not smooth (kinks); integration is performed
/// independently on each breakpoint-delimited subinterval.
struct IntegrandSpec {
    std::function<double(double)> eval;
    std::vector<double> breakpoints;  // strictly increasing
};

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::size_t subintervals_used = 0;
    bool converged = false;

    /// Value, or NonConvergence when the estimate cannot be trusted.
    double value_or_throw() const {
        if (!converged)
            throw NonConvergence("quadrature did not converge within tolerance");
        return value;
    }
};

/// Adaptive Gauss-Kronrod 7/15 integration of spec.eval over [a, b].
QuadratureResult integrate(const IntegrandSpec& spec, double a, double b,
                           double abs_tol = kDefaultAbsTol,
                           double rel_tol = kDefaultRelTol);

/// Integral over [a, b] with the union of the open windows removed.
/// Windows may overlap each other and extend past the interval.
QuadratureResult integrate_excluding(
    const IntegrandSpec& spec, double a, double b,
    const std::vector<std::pair<double, double>>& windows,
    double abs_tol = kDefaultAbsTol, double rel_tol = kDefaultRelTol);

/// Integral over [a, b] minus the window (cut_center - eps, cut_center + eps).
/// The only sanctioned way to approach an integrand with a singularity.
QuadratureResult integrate_truncated_singular(const IntegrandSpec& spec,
                                              double a, double b,
                                              double cut_center, double epsilon,
                                              double abs_tol = kDefaultAbsTol);

}  // namespace dmetric::quadrature
