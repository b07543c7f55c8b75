#include "dmetric/comparison.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace dmetric {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kBoundaryResidualTol = 1e-9;

// Roots of a t^2 + b t + c = 0 with c < 0, via the cancellation-free form.
std::pair<double, double> stable_roots(double a, double b, double c) {
    const double disc = std::sqrt(b * b - 4.0 * a * c);
    const double w = -0.5 * (b + std::copysign(disc, b == 0.0 ? 1.0 : b));
    double t1 = w / a;
    double t2 = c / w;
    if (t1 > t2) std::swap(t1, t2);
    return {t1, t2};
}

}  // namespace

double poincare_distance(const HyperbolicModel& model, const DiskPoint& p,
                         const DiskPoint& q) {
    const double dx = p.x() - q.x();
    const double dy = p.y() - q.y();
    const double sep2 = dx * dx + dy * dy;
    if (sep2 == 0.0) return 0.0;
    const double denom2 = sep2 + (1.0 - p.x() * p.x() - p.y() * p.y()) *
                                     (1.0 - q.x() * q.x() - q.y() * q.y());
    return model.kappa * 2.0 * std::atanh(std::sqrt(sep2 / denom2));
}

double hyperbolic_height(double b) {
    if (std::isnan(b) || b < 0.0)
        throw DomainError("triangle side must be nonnegative or infinite");
    if (std::isinf(b)) return std::log(1.0 + kSqrt2);
    const double u = (kSqrt2 / 2.0) * std::tanh(b);
    return 0.5 * std::log((1.0 + u) / (1.0 - u));
}

double d_metric_height(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("x must lie in [0, 1]");
    return distance_closed_form(DiskPoint::origin(),
                                DiskPoint((kSqrt2 / 2.0) * x, 0.0));
}

ObstructionReport kappa_obstruction() {
    const double h_inf = hyperbolic_height(
        std::numeric_limits<double>::infinity());
    const double hd_one = d_metric_height(1.0);
    const double hd_half = d_metric_height(kSqrt2 / 2.0);

    ObstructionReport report;
    report.kappa0 = hd_one / h_inf;
    report.rho = hd_half / hyperbolic_height(hd_one);
    report.kappa0_exceeds_3 = report.kappa0 > 3.0;
    report.rho_below_3 = report.rho < 3.0;
    report.verdict =
        "not isometric to any hyperbolic model of constant negative curvature";
    return report;
}

ConvexDomain ConvexDomain::ellipse(double semi_a, double semi_b, Vec2 center) {
    if (!(semi_a > 0.0 && semi_b > 0.0))
        throw DomainError("ellipse semi-axes must be positive");
    return ConvexDomain(EllipseData{semi_a, semi_b, center});
}

ConvexDomain ConvexDomain::polygon(std::vector<Vec2> vertices) {
    const std::size_t n = vertices.size();
    if (n < 3) throw DomainError("polygon needs at least 3 vertices");
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = vertices[i];
        const Vec2& b = vertices[(i + 1) % n];
        const Vec2& c = vertices[(i + 2) % n];
        const double cross = (b.x - a.x) * (c.y - b.y) -
                             (b.y - a.y) * (c.x - b.x);
        if (!(cross > 0.0))
            throw DomainError(
                "polygon vertices must be strictly convex and counterclockwise");
    }
    return ConvexDomain(PolygonData{std::move(vertices)});
}

bool ConvexDomain::contains(const Vec2& p) const {
    if (const auto* e = std::get_if<EllipseData>(&shape_)) {
        const double u = (p.x - e->center.x) / e->a;
        const double v = (p.y - e->center.y) / e->b;
        return u * u + v * v < 1.0;
    }
    const auto& poly = std::get<PolygonData>(shape_);
    const std::size_t n = poly.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = poly.vertices[i];
        const Vec2& b = poly.vertices[(i + 1) % n];
        if (!((b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x) > 0.0))
            return false;
    }
    return true;
}

bool ConvexDomain::is_unit_circle() const {
    const auto* e = std::get_if<EllipseData>(&shape_);
    return e != nullptr && e->a == 1.0 && e->b == 1.0 && e->center.x == 0.0 &&
           e->center.y == 0.0;
}

std::pair<double, double> ConvexDomain::chord_parameters(const Vec2& p,
                                                         const Vec2& q) const {
    if (const auto* e = std::get_if<EllipseData>(&shape_)) {
        // Normalize so the boundary becomes the unit circle.
        const double ux = (p.x - e->center.x) / e->a;
        const double uy = (p.y - e->center.y) / e->b;
        const double dx = (q.x - p.x) / e->a;
        const double dy = (q.y - p.y) / e->b;
        const auto [t1, t2] =
            stable_roots(dx * dx + dy * dy, 2.0 * (ux * dx + uy * dy),
                         ux * ux + uy * uy - 1.0);
        for (double t : {t1, t2}) {
            const double bx = ux + t * dx;
            const double by = uy + t * dy;
            if (std::abs(std::hypot(bx, by) - 1.0) > kBoundaryResidualTol)
                throw DegenerateBoundary("ill-conditioned boundary hit");
        }
        return {t1, t2};
    }

    const auto& poly = std::get<PolygonData>(shape_);
    const std::size_t n = poly.vertices.size();
    const double dx = q.x - p.x;
    const double dy = q.y - p.y;
    std::vector<double> hits;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = poly.vertices[i];
        const Vec2& b = poly.vertices[(i + 1) % n];
        const double ex = b.x - a.x;
        const double ey = b.y - a.y;
        const double det = dx * ey - dy * ex;
        if (std::abs(det) < 1e-15) continue;  // parallel edge
        const double t = ((a.x - p.x) * ey - (a.y - p.y) * ex) / det;
        const double s = ((a.x - p.x) * dy - (a.y - p.y) * dx) / det;
        if (s >= -1e-12 && s <= 1.0 + 1e-12) hits.push_back(t);
    }
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end(),
                           [](double a, double b) { return b - a < 1e-9; }),
               hits.end());
    if (hits.size() != 2)
        throw DegenerateBoundary("line does not cross the boundary cleanly");
    return {hits[0], hits[1]};
}

double hilbert_distance(const ConvexDomain& domain, const Vec2& p,
                        const Vec2& q) {
    if (!domain.contains(p) || !domain.contains(q))
        throw OutsideDomain("points must lie strictly inside the domain");
    if (p.x == q.x && p.y == q.y) return 0.0;
    const auto [ta, tb] = domain.chord_parameters(p, q);
    if (!(ta < 0.0 && tb > 1.0))
        throw DegenerateBoundary("boundary hits do not straddle the chord");
    // Cross-ratio [a, p, q, b] in the affine parameter of the chord.
    return 0.5 * std::log(((1.0 - ta) * tb) / ((-ta) * (tb - 1.0)));
}

PropertyReport hilbert_metric_properties(const ConvexDomain& domain,
                                         std::size_t samples,
                                         std::uint64_t seed) {
    if (samples < 10) throw DomainError("need at least 10 samples");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    // Rejection sampling over a bracketing box, contracted toward a known
    // interior point so chord endpoints stay well-conditioned.
    const auto sample_point = [&]() {
        for (int attempt = 0; attempt < 10000; ++attempt) {
            Vec2 p{-4.0 + 8.0 * unif(rng), -4.0 + 8.0 * unif(rng)};
            if (!domain.contains(p)) continue;
            Vec2 contracted{0.9 * p.x, 0.9 * p.y};
            if (domain.contains(contracted)) return contracted;
        }
        throw Error("failed to sample an interior point");
    };

    PropertyReport report;
    double worst_triangle = std::numeric_limits<double>::infinity();
    double worst_additivity = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        const Vec2 a = sample_point();
        const Vec2 b = sample_point();
        const Vec2 c = sample_point();
        worst_triangle = std::min(
            worst_triangle, hilbert_distance(domain, a, b) +
                                hilbert_distance(domain, b, c) -
                                hilbert_distance(domain, a, c));
        const double t = 0.1 + 0.8 * unif(rng);
        const Vec2 m{a.x + t * (c.x - a.x), a.y + t * (c.y - a.y)};
        worst_additivity = std::max(
            worst_additivity,
            std::abs(hilbert_distance(domain, a, c) -
                     hilbert_distance(domain, a, m) -
                     hilbert_distance(domain, m, c)));
    }
    report.checks.push_back(
        {"triangle_inequality", worst_triangle >= -1e-12, worst_triangle});
    report.checks.push_back(
        {"chord_additivity", worst_additivity <= 1e-9, worst_additivity});

    if (domain.is_unit_circle()) {
        double worst_radial = 0.0;
        const HyperbolicModel unit(1.0);
        for (double r : {0.1, 0.5, 0.9}) {
            const double dh = hilbert_distance(domain, {0.0, 0.0}, {r, 0.0});
            worst_radial = std::max(
                worst_radial,
                std::abs(dh - 0.5 * std::log((1.0 + r) / (1.0 - r))));
            worst_radial = std::max(
                worst_radial,
                std::abs(dh - 0.5 * poincare_distance(unit, DiskPoint::origin(),
                                                      DiskPoint(r, 0.0))));
        }
        report.checks.push_back(
            {"radial_half_log_cross_ratio", worst_radial <= 1e-12,
             worst_radial});

        // No single scaling lambda matches D against d_H at two radii.
        const double r1 = 0.5;
        const double r2 = kSqrt2 / 2.0;
        const double ratio1 =
            distance_closed_form(DiskPoint::origin(), DiskPoint(r1, 0.0)) /
            hilbert_distance(domain, {0.0, 0.0}, {r1, 0.0});
        const double ratio2 =
            distance_closed_form(DiskPoint::origin(), DiskPoint(r2, 0.0)) /
            hilbert_distance(domain, {0.0, 0.0}, {r2, 0.0});
        const double margin = std::abs(ratio1 - ratio2);
        report.checks.push_back(
            {"two_radius_non_proportionality", margin > 0.1, margin});
    }

    report.passed = std::all_of(report.checks.begin(), report.checks.end(),
                                [](const PropertyCheck& c) { return c.passed; });
    return report;
}

}  // namespace dmetric
