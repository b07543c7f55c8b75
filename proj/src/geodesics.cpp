#include "dmetric/geodesics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "dmetric/quadrature.hpp"

namespace dmetric {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kOffChordTol = 1e-10;

double wrap_full_turn(double angle) {
    double a = std::fmod(angle, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    return a;
}

double wrap_half_turn(double angle) {
    double a = std::fmod(angle, kPi);
    if (a < 0.0) a += kPi;
    return a;
}

// Positive root t of |p + t d| = radius with |p| < radius, |d| = 1.
double forward_circle_hit(double px, double py, double dx, double dy,
                          double radius) {
    const double b = px * dx + py * dy;
    const double c = px * px + py * py - radius * radius;
    return -b + std::sqrt(b * b - c);
}

double f_standard(double t) { return t / (1.0 - std::abs(t)); }

// Windows of half-width eps around every angle congruent to center mod pi
// that can intersect [0, pi].
void add_singular_windows(std::vector<std::pair<double, double>>& windows,
                          double center, double eps) {
    const double base = wrap_half_turn(center);
    for (double s : {base - kPi, base, base + kPi})
        windows.emplace_back(s - eps, s + eps);
}

}  // namespace

BoundaryPoint::BoundaryPoint(double angle) : angle_(wrap_full_turn(angle)) {}

double BoundaryPoint::x() const { return std::cos(angle_); }
double BoundaryPoint::y() const { return std::sin(angle_); }

Chord::Chord(BoundaryPoint first, BoundaryPoint second)
    : first_(first), second_(second) {
    if (first_ == second_)
        throw DegenerateInput("chord endpoints must be distinct");
}

DiskPoint Chord::point_at(double t) const {
    return DiskPoint((1.0 - t) * first_.x() + t * second_.x(),
                     (1.0 - t) * first_.y() + t * second_.y());
}

double Chord::transverse_deviation(const DiskPoint& p) const {
    const double ux = second_.x() - first_.x();
    const double uy = second_.y() - first_.y();
    const double len = std::hypot(ux, uy);
    return std::abs(ux * (p.y() - first_.y()) - uy * (p.x() - first_.x())) /
           len;
}

Chord chord_through(const DiskPoint& p, const DiskPoint& q) {
    if (p == q) throw DegenerateInput("two distinct points required");
    const double dx = q.x() - p.x();
    const double dy = q.y() - p.y();
    // Stable quadratic solve for the two unit-circle hits of the line p + t d.
    const double a = dx * dx + dy * dy;
    const double b = 2.0 * (p.x() * dx + p.y() * dy);
    const double c = p.x() * p.x() + p.y() * p.y() - 1.0;
    const double disc = std::sqrt(b * b - 4.0 * a * c);
    const double w = -0.5 * (b + std::copysign(disc, b == 0.0 ? 1.0 : b));
    double t1 = w / a;
    double t2 = c / w;
    if (t1 > t2) std::swap(t1, t2);  // t1 < 0 < 1 < t2 along p -> q
    const double bx = p.x() + t1 * dx;
    const double by = p.y() + t1 * dy;
    const double fx = p.x() + t2 * dx;
    const double fy = p.y() + t2 * dy;
    return Chord(BoundaryPoint(std::atan2(by, bx)),
                 BoundaryPoint(std::atan2(fy, fx)));
}

double d_length_along(const Chord& chord, const DiskPoint& a,
                      const DiskPoint& b) {
    if (chord.transverse_deviation(a) > kOffChordTol ||
        chord.transverse_deviation(b) > kOffChordTol)
        throw OffChord("point does not lie on the chord");
    return distance_closed_form(a, b);
}

GeodesicRay::GeodesicRay(DiskPoint origin, BoundaryPoint ideal_end)
    : origin_(origin), ideal_end_(ideal_end) {
    const double dx = ideal_end_.x() - origin_.x();
    const double dy = ideal_end_.y() - origin_.y();
    t_max_ = std::hypot(dx, dy);
    dir_x_ = dx / t_max_;
    dir_y_ = dy / t_max_;
}

DiskPoint GeodesicRay::point_at(double t) const {
    if (t < 0.0) throw DomainError("ray parameter must be nonnegative");
    return DiskPoint(origin_.x() + t * dir_x_, origin_.y() + t * dir_y_);
}

double GeodesicRay::param_at_norm(double cutoff) const {
    if (origin_.norm() >= cutoff) return 0.0;
    return forward_circle_hit(origin_.x(), origin_.y(), dir_x_, dir_y_,
                              cutoff);
}

DiskPoint point_at_d_length(const GeodesicRay& ray, double s, double tol) {
    if (s < 0.0) throw DomainError("arc length must be nonnegative");
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    if (s == 0.0) return ray.origin();

    const auto length_at = [&](double t) {
        return distance_closed_form(ray.origin(), ray.point_at(t));
    };

    // Bracket: push t toward the boundary until the cumulative D-length
    // exceeds s; it is unbounded, so this terminates quickly.
    double lo = 0.0;
    double hi = 0.0;
    double gap = ray.t_max();
    int budget = 200;
    while (budget-- > 0) {
        gap *= 0.5;
        hi = ray.t_max() - gap;
        if (length_at(hi) >= s) break;
        lo = hi;
    }
    if (budget <= 0) throw NonConvergence("failed to bracket the arc length");

    while (budget-- > 0) {
        const double mid = 0.5 * (lo + hi);
        const double len = length_at(mid);
        if (std::abs(len - s) <= tol) return ray.point_at(mid);
        (len < s ? lo : hi) = mid;
    }
    throw NonConvergence("arc-length inversion exceeded iteration budget");
}

double divergence_profile_ray(const BoundaryPoint& xi, double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 0.25 * kPi))
        throw DomainError("epsilon must lie in (0, pi/4)");
    const double theta_xi = xi.angle();
    quadrature::IntegrandSpec spec{
        [=](double theta) {
            return 1.0 / (1.0 - std::abs(std::cos(theta - theta_xi))) - 1.0;
        },
        {wrap_half_turn(theta_xi + 0.5 * kPi)}};
    std::vector<std::pair<double, double>> windows;
    add_singular_windows(windows, theta_xi, epsilon);
    // The integrand blows up like 1/eps near the excluded windows, so the
    // error-estimate floor scales with the value; a relative target of 1e-11
    // keeps the estimator honest while the true error stays far smaller.
    return quadrature::integrate_excluding(spec, 0.0, kPi, windows, 1e-9,
                                           1e-11)
        .value_or_throw();
}

double divergence_profile_chord(const BoundaryPoint& xi,
                                const BoundaryPoint& eta, double epsilon) {
    if (xi == eta) throw DegenerateInput("boundary points must be distinct");
    if (!(epsilon > 0.0 && epsilon < 0.25 * kPi))
        throw DomainError("epsilon must lie in (0, pi/4)");
    const double a1 = xi.angle();
    const double a2 = eta.angle();

    std::vector<double> kinks;
    kinks.push_back(wrap_half_turn(a1 + 0.5 * kPi));
    kinks.push_back(wrap_half_turn(a2 + 0.5 * kPi));
    // Zero crossing of the projected difference xi - eta.
    const double dx = xi.x() - eta.x();
    const double dy = xi.y() - eta.y();
    kinks.push_back(wrap_half_turn(std::atan2(dy, dx) + 0.5 * kPi));
    std::sort(kinks.begin(), kinks.end());
    kinks.erase(std::unique(kinks.begin(), kinks.end(),
                            [](double a, double b) { return b - a < 1e-13; }),
                kinks.end());

    quadrature::IntegrandSpec spec{
        [=](double theta) {
            return std::abs(f_standard(std::cos(theta - a1)) -
                            f_standard(std::cos(theta - a2)));
        },
        kinks};
    std::vector<std::pair<double, double>> windows;
    add_singular_windows(windows, a1, epsilon);
    add_singular_windows(windows, a2, epsilon);
    return quadrature::integrate_excluding(spec, 0.0, kPi, windows, 1e-9,
                                           1e-11)
        .value_or_throw();
}

double ray_gap_dtheta(double lambda, double x, double theta) {
    if (!(x > 0.0 && x < 1.0)) throw DomainError("x must lie in (0, 1)");
    if (!(lambda > 0.0)) throw DomainError("lambda must be positive");
    if (!(theta >= 0.0 && theta <= kPi))
        throw DomainError("theta must lie in [0, pi]");
    const double ay = lambda * (1.0 - x);
    if (!(x * x + ay * ay < 1.0))
        throw DomainError("upper ray point lies outside the disk");

    const double r = std::sqrt(x * x + ay * ay);
    const double cos_tx = x / r;
    const double theta_x = std::atan2(ay, x);
    const double upper = std::cos(theta - theta_x) / cos_tx;  // A_theta / x

    if (theta <= 0.5 * kPi)
        return 1.0 / (1.0 - x * upper) - 1.0 / (1.0 - x * std::cos(theta));
    if (theta <= 0.5 * kPi + theta_x)
        return 1.0 / (1.0 - x * upper) + 1.0 / (1.0 + x * std::cos(theta)) -
               2.0;
    return -1.0 / (1.0 + x * upper) + 1.0 / (1.0 + x * std::cos(theta));
}

RayGapProfile ray_gap_profile(double lambda, double x) {
    if (!(x > 0.0 && x < 1.0)) throw DomainError("x must lie in (0, 1)");
    if (!(lambda > 0.0)) throw DomainError("lambda must be positive");
    const double ay = lambda * (1.0 - x);
    if (!(x * x + ay * ay < 1.0))
        throw DomainError("upper ray point lies outside the disk");
    const double omega_x = std::acos(x);
    const double sin_w = std::sqrt(1.0 - x * x);
    const double phi_max =
        sin_w / (1.0 - x * x - lambda * (1.0 - x) * sin_w);
    return {phi_max, omega_x};
}

namespace {

// Distance from a point to the (truncated) image of a ray: coarse bracketing
// on a uniform parameter grid, then golden-section refinement in the best
// bracket. The map is treated as a black box.
double point_to_ray_distance(const DiskPoint& p, const GeodesicRay& ray,
                             std::size_t grid, double tol,
                             double inner_cutoff) {
    const double t_hi = ray.param_at_norm(inner_cutoff);
    const auto dist_at = [&](double t) {
        return distance_closed_form(p, ray.point_at(t));
    };

    std::size_t best = 0;
    double best_val = dist_at(0.0);
    for (std::size_t i = 1; i <= grid; ++i) {
        const double v = dist_at(t_hi * static_cast<double>(i) /
                                 static_cast<double>(grid));
        if (v < best_val) {
            best_val = v;
            best = i;
        }
    }
    double lo = t_hi * static_cast<double>(best > 0 ? best - 1 : 0) /
                static_cast<double>(grid);
    double hi = t_hi * static_cast<double>(std::min(best + 1, grid)) /
                static_cast<double>(grid);

    constexpr double kGolden = 0.6180339887498949;
    double x1 = hi - kGolden * (hi - lo);
    double x2 = lo + kGolden * (hi - lo);
    double f1 = dist_at(x1);
    double f2 = dist_at(x2);
    int budget = 200;
    while (hi - lo > tol && budget-- > 0) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kGolden * (hi - lo);
            f1 = dist_at(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kGolden * (hi - lo);
            f2 = dist_at(x2);
        }
    }
    if (budget <= 0)
        throw NonConvergence("point-to-ray minimization exceeded budget");
    return std::min({best_val, f1, f2});
}

double directed_sup(const GeodesicRay& from, const GeodesicRay& to,
                    std::size_t grid, double tol, double cutoff,
                    double inner_cutoff) {
    const double t_cut = from.param_at_norm(cutoff);
    double sup = 0.0;
    for (std::size_t j = 0; j <= grid; ++j) {
        const DiskPoint p = from.point_at(t_cut * static_cast<double>(j) /
                                          static_cast<double>(grid));
        sup = std::max(sup,
                       point_to_ray_distance(p, to, grid, tol, inner_cutoff));
    }
    return sup;
}

}  // namespace

HausdorffEstimate hausdorff_distance_rays(const GeodesicRay& r1,
                                          const GeodesicRay& r2,
                                          std::size_t grid, double tol,
                                          double cutoff) {
    if (grid < 16) throw DomainError("grid must be at least 16");
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    if (!(cutoff > 0.0 && cutoff < 1.0))
        throw DomainError("cutoff must lie in (0, 1)");
    // The inner minimization searches deeper toward the boundary than the
    // outer sup samples, so near-cutoff samples still find their closest
    // point on the other ray.
    const double inner_cutoff =
        std::min(1.0 - (1.0 - cutoff) * 1e-2, 1.0 - 1e-10);
    const double s1 = directed_sup(r1, r2, grid, tol, cutoff, inner_cutoff);
    const double s2 = directed_sup(r2, r1, grid, tol, cutoff, inner_cutoff);
    const double resolution =
        std::max(r1.param_at_norm(cutoff), r2.param_at_norm(cutoff)) /
        static_cast<double>(grid);
    return {std::max(s1, s2), resolution};
}

bool are_asymptotic(const GeodesicRay& r1, const GeodesicRay& r2) {
    return r1.ideal_end() == r2.ideal_end();
}

}  // namespace dmetric
