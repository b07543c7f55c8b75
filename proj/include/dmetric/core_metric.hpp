#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "dmetric/errors.hpp"
#include "dmetric/quadrature.hpp"

namespace dmetric {

/// Points whose Euclidean norm exceeds 1 - kDiskMargin are rejected at
/// construction; the metric blows up at the boundary and a hard margin keeps
/// every finite operation well-conditioned.
inline constexpr double kDiskMargin = 1e-12;

/// A point strictly inside the open unit disk.
class DiskPoint {
  public:
    DiskPoint(double x, double y) : x_(x), y_(y) {
        if (!(x * x + y * y < (1.0 - kDiskMargin) * (1.0 - kDiskMargin)))
            throw DomainError("point is not strictly inside the unit disk");
    }
    static DiskPoint origin() { return DiskPoint(0.0, 0.0); }

    double x() const { return x_; }
    double y() const { return y_; }
    double norm() const { return std::hypot(x_, y_); }
    double arg() const { return std::atan2(y_, x_); }

    friend bool operator==(const DiskPoint&, const DiskPoint&) = default;

  private:
    double x_;
    double y_;
};

/// The 1-D generator inducing the interval metric on (-1, 1). The standard
/// generator is t -> t / (1 - |t|); custom generators must be strictly
/// increasing and get numeric distance evaluation only.
class Generator {
  public:
    enum class Kind { Standard, Custom };

    static Generator standard();
    static Generator custom(std::function<double(double)> eval,
                            std::string description);

    Kind kind() const { return kind_; }
    const std::string& description() const { return description_; }

    /// Evaluate at t in (-1, 1). DomainError when |t| >= 1.
    double operator()(double t) const;

  private:
    Generator(Kind kind, std::function<double(double)> eval,
              std::string description)
        : kind_(kind), eval_(std::move(eval)),
          description_(std::move(description)) {}

    Kind kind_;
    std::function<double(double)> eval_;
    std::string description_;
};

/// Signed coordinate of a point's projection onto the diameter at angle theta.
struct DirectionalProjection {
    double theta;
    double value;
};

double generator_eval(const Generator& g, double t);

/// |g(s) - g(t)|; the interval metric on (-1, 1).
double interval_distance(const Generator& g, double s, double t);

DirectionalProjection project(const DiskPoint& p, double theta);

/// Interval distance of the two projections onto the diameter at theta.
double directional_distance(const Generator& g, const DiskPoint& p,
                            const DiskPoint& q, double theta);

/// Angles in [0, pi) where the directional integrand for (p, q) has a kink:
/// the zero crossings of p.u_theta, q.u_theta and (p - q).u_theta.
std::vector<double> kink_angles(const DiskPoint& p, const DiskPoint& q);

/// D(p, q) by adaptive quadrature of theta -> d_theta(p, q) over [0, pi],
/// split at the integrand's kink angles.
quadrature::QuadratureResult distance_numeric(const Generator& g,
                                              const DiskPoint& p,
                                              const DiskPoint& q,
                                              double tol = 1e-10);

/// D(p, q) for the standard generator by exact piecewise integration with the
/// arctangent antiderivative. Branch jumps of the antiderivative are handled
/// by adding the analytic jump constant, never by nudging evaluation points.
double distance_closed_form(const DiskPoint& p, const DiskPoint& q);

/// Upper bound certificate pi * |p| / (1 - |p|) for D(O, p).
double distance_origin_bound(const DiskPoint& p);

struct ValidationReport {
    bool monotone = false;
    bool divergence = false;
    /// Values of the circular integral of |g(t cos theta)| at t = 1 - 10^-k,
    /// k = 2..6, used for the divergence heuristic.
    std::vector<double> divergence_samples;
};

/// Checks strict monotonicity on a sample grid and numerically probes the
/// boundary-divergence condition. The divergence verdict is a heuristic from
/// a finite sequence, not a proof.
ValidationReport validate_generator(const Generator& g, std::size_t samples);

}  // namespace dmetric
