#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "dmetric/core_metric.hpp"
#include "dmetric/errors.hpp"

namespace dmetric {

/// A plain planar point (not confined to the unit disk).
struct Vec2 {
    double x;
    double y;
};

/// The constant-curvature hyperbolic model on the open unit disk with
/// parameter kappa; distances are the Poincare-disk distance multiplied by
/// kappa.
struct HyperbolicModel {
    double kappa;
    explicit HyperbolicModel(double k) : kappa(k) {
        if (!(k > 0.0)) throw DomainError("kappa must be positive");
    }
};

double poincare_distance(const HyperbolicModel& model, const DiskPoint& p,
                         const DiskPoint& q);

/// Height of the right isoceles hyperbolic triangle with legs of length b on
/// the axes; pass +infinity for the ideal triangle, giving log(1 + sqrt 2).
double hyperbolic_height(double b);

/// Height h^D(x) = D(O, (sqrt2/2) x) of the right isoceles geodesic triangle
/// with vertices O, (x, 0), (0, x); finite even at x = 1.
double d_metric_height(double x);

struct ObstructionReport {
    double kappa0;  // the unique scaling candidate forced by ideal heights
    double rho;     // the finite-triangle height ratio
    bool kappa0_exceeds_3;
    bool rho_below_3;
    std::string verdict;
};

/// The scaling obstruction: an isometry to a hyperbolic model would force
/// kappa = kappa0 and kappa = rho simultaneously, but kappa0 > 3 > rho.
ObstructionReport kappa_obstruction();

/// A bounded convex domain carrying the cross-ratio (Hilbert) metric.
class ConvexDomain {
  public:
    static ConvexDomain ellipse(double semi_a, double semi_b,
                                Vec2 center = {0.0, 0.0});
    /// Vertices must be strictly convex and counterclockwise.
    static ConvexDomain polygon(std::vector<Vec2> vertices);

    bool contains(const Vec2& p) const;
    bool is_unit_circle() const;

    /// Parameters (t_a, t_b) of the two boundary hits of the line
    /// p + t (q - p), ordered t_a < 0 < 1 < t_b.
    std::pair<double, double> chord_parameters(const Vec2& p,
                                               const Vec2& q) const;

  private:
    struct EllipseData {
        double a, b;
        Vec2 center;
    };
    struct PolygonData {
        std::vector<Vec2> vertices;
    };
    explicit ConvexDomain(std::variant<EllipseData, PolygonData> shape)
        : shape_(std::move(shape)) {}
    std::variant<EllipseData, PolygonData> shape_;
};

/// Hilbert metric: half the log cross-ratio of p, q with the two boundary
/// intersections of their chord.
double hilbert_distance(const ConvexDomain& domain, const Vec2& p,
                        const Vec2& q);

struct PropertyCheck {
    std::string name;
    bool passed;
    double worst;
};

struct PropertyReport {
    bool passed;
    std::vector<PropertyCheck> checks;
};

/// Samples triples to confirm the Hilbert triangle inequality and chord
/// additivity; on the unit circle additionally checks the radial closed form
/// and the two-radius scaling mismatch against D.
PropertyReport hilbert_metric_properties(const ConvexDomain& domain,
                                         std::size_t samples,
                                         std::uint64_t seed = 42);

}  // namespace dmetric
