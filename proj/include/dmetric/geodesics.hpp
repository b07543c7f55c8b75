#pragma once

#include <cstddef>

#include "dmetric/core_metric.hpp"
#include "dmetric/errors.hpp"

namespace dmetric {

/// An ideal point on the unit circle, stored as an angle in [0, 2pi).
class BoundaryPoint {
  public:
    explicit BoundaryPoint(double angle);
    double angle() const { return angle_; }
    double x() const;
    double y() const;

    friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;

  private:
    double angle_;
};

/// A Euclidean chord of the unit disk. Chords are exactly the geodesic lines
/// of the metric D.
class Chord {
  public:
    Chord(BoundaryPoint first, BoundaryPoint second);

    const BoundaryPoint& first() const { return first_; }
    const BoundaryPoint& second() const { return second_; }

    /// Affine parametrization: t in (0, 1) maps to an interior point.
    DiskPoint point_at(double t) const;

    /// Transverse (perpendicular) deviation of a point from the chord line.
    double transverse_deviation(const DiskPoint& p) const;

  private:
    BoundaryPoint first_;
    BoundaryPoint second_;
};

/// The unique chord whose interior contains both p and q.
Chord chord_through(const DiskPoint& p, const DiskPoint& q);

/// D-length between two points of a chord; OffChord if either point deviates
/// from the chord line by more than 1e-10.
double d_length_along(const Chord& chord, const DiskPoint& a,
                      const DiskPoint& b);

/// Geodesic ray from an interior origin toward an ideal boundary point,
/// parametrized by Euclidean distance from the origin on [0, t_max).
class GeodesicRay {
  public:
    GeodesicRay(DiskPoint origin, BoundaryPoint ideal_end);

    const DiskPoint& origin() const { return origin_; }
    const BoundaryPoint& ideal_end() const { return ideal_end_; }
    double t_max() const { return t_max_; }
    double dir_x() const { return dir_x_; }
    double dir_y() const { return dir_y_; }

    DiskPoint point_at(double t) const;

    /// Largest parameter t with |point_at(t)| <= cutoff (0 when the origin
    /// already lies beyond the cutoff).
    double param_at_norm(double cutoff) const;

  private:
    DiskPoint origin_;
    BoundaryPoint ideal_end_;
    double dir_x_;
    double dir_y_;
    double t_max_;
};

/// The unique point p on the ray with D(origin, p) = s, found by monotone
/// root finding in the Euclidean parameter.
DiskPoint point_at_d_length(const GeodesicRay& ray, double s,
                            double tol = 1e-10);

/// Truncated integral over [0, pi] of d_theta(O, xi) with eps-windows excised
/// around the singular angles; grows without bound as eps -> 0.
double divergence_profile_ray(const BoundaryPoint& xi, double epsilon);

/// Same truncated profile for d_theta(xi, eta) between two boundary points.
double divergence_profile_chord(const BoundaryPoint& xi,
                                const BoundaryPoint& eta, double epsilon);

/// Directional gap d_theta(A, B) between the points A = (x, lambda (1 - x))
/// and B = (x, 0) of two rays sharing the ideal point (1, 0), evaluated by
/// the explicit three-branch formula in the frame fixed by that ideal point.
double ray_gap_dtheta(double lambda, double x, double theta);

struct RayGapProfile {
    double phi_max;  // maximum of sin th / (1 - x cos th - lambda (1-x) sin th)
    double omega_x;  // arccos(x), the maximizing angle
};
RayGapProfile ray_gap_profile(double lambda, double x);

struct HausdorffEstimate {
    double value;
    double resolution;  // coarse-grid spacing in the Euclidean parameter
};

/// Numeric estimate of the Hausdorff distance between two ray images: the
/// sup is sampled over each ray truncated at the Euclidean norm cutoff, the
/// inner inf by coarse grid bracketing plus golden-section refinement.
HausdorffEstimate hausdorff_distance_rays(const GeodesicRay& r1,
                                          const GeodesicRay& r2,
                                          std::size_t grid, double tol,
                                          double cutoff = 1.0 - 1e-6);

/// True iff the rays share their ideal endpoint (exact comparison of
/// canonicalized angles); equivalent to bounded Hausdorff distance.
bool are_asymptotic(const GeodesicRay& r1, const GeodesicRay& r2);

}  // namespace dmetric
