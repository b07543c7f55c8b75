#include "dmetric/suites.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "dmetric/comparison.hpp"
#include "dmetric/core_metric.hpp"
#include "dmetric/errors.hpp"

namespace dmetric::suites {
namespace {

constexpr double kPi = std::numbers::pi;

class Sampler {
  public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    DiskPoint disk_point(double r_max = 0.9) {
        const double r = r_max * std::sqrt(unif_(rng_));
        const double a = 2.0 * kPi * unif_(rng_);
        return DiskPoint(r * std::cos(a), r * std::sin(a));
    }
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * unif_(rng_);
    }

  private:
    std::mt19937_64 rng_;
    std::uniform_real_distribution<double> unif_{0.0, 1.0};
};

SuiteReport finish(std::string name, std::vector<PropertyResult> props) {
    const bool passed = std::all_of(props.begin(), props.end(),
                                    [](const PropertyResult& p) { return p.passed; });
    return {std::move(name), passed, std::move(props)};
}

SuiteReport metric_axioms(std::size_t samples, std::uint64_t seed) {
    Sampler sampler(seed);
    double min_distance = std::numeric_limits<double>::infinity();
    double worst_symmetry = 0.0;
    double min_triangle_slack = std::numeric_limits<double>::infinity();
    double max_self_distance = 0.0;
    double min_separation = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < samples; ++i) {
        const DiskPoint p = sampler.disk_point();
        const DiskPoint q = sampler.disk_point();
        const DiskPoint r = sampler.disk_point();
        const double dpq = distance_closed_form(p, q);
        const double dqr = distance_closed_form(q, r);
        const double dpr = distance_closed_form(p, r);
        min_distance = std::min({min_distance, dpq, dqr, dpr});
        worst_symmetry =
            std::max(worst_symmetry, std::abs(dpq - distance_closed_form(q, p)));
        min_triangle_slack = std::min(min_triangle_slack, dpq + dqr - dpr);
        max_self_distance =
            std::max(max_self_distance, distance_closed_form(p, p));
        if (!(p == q)) min_separation = std::min(min_separation, dpq);
    }
    return finish("metric-axioms",
                  {{"nonnegative", min_distance >= 0.0, min_distance},
                   {"identity_of_indiscernibles",
                    max_self_distance == 0.0 && min_separation > 1e-12,
                    max_self_distance},
                   {"symmetry_exact", worst_symmetry == 0.0, worst_symmetry},
                   {"triangle_inequality", min_triangle_slack >= -1e-9,
                    min_triangle_slack}});
}

SuiteReport additivity(std::size_t samples, std::uint64_t seed) {
    Sampler sampler(seed);
    double worst_collinear = 0.0;
    double min_strict_slack = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < samples; ++i) {
        // Collinear triple with y strictly between x and z.
        const DiskPoint x = sampler.disk_point();
        const DiskPoint z = sampler.disk_point();
        if (x == z) continue;
        const double t = sampler.uniform(0.1, 0.9);
        const DiskPoint y(x.x() + t * (z.x() - x.x()),
                          x.y() + t * (z.y() - x.y()));
        worst_collinear = std::max(
            worst_collinear,
            std::abs(distance_closed_form(x, z) - distance_closed_form(x, y) -
                     distance_closed_form(y, z)));

        // Point pushed transversely off the segment: strict inequality.
        const double sep = std::hypot(z.x() - x.x(), z.y() - x.y());
        if (sep < 0.2) continue;
        const double nx = -(z.y() - x.y()) / sep;
        const double ny = (z.x() - x.x()) / sep;
        const double off = sampler.uniform(0.05, 0.2);
        const double wx = 0.5 * (x.x() + z.x()) + off * nx;
        const double wy = 0.5 * (x.y() + z.y()) + off * ny;
        if (wx * wx + wy * wy >= 0.96 * 0.96) continue;
        const DiskPoint w(wx, wy);
        min_strict_slack = std::min(
            min_strict_slack, distance_closed_form(x, w) +
                                  distance_closed_form(w, z) -
                                  distance_closed_form(x, z));
    }
    return finish("additivity",
                  {{"collinear_additivity", worst_collinear <= 1e-8,
                    worst_collinear},
                   {"off_chord_strictness", min_strict_slack > 1e-9,
                    min_strict_slack}});
}

SuiteReport isometries(std::size_t samples, std::uint64_t seed) {
    Sampler sampler(seed);
    double worst_rotation = 0.0;
    double worst_reflection = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        const DiskPoint p = sampler.disk_point();
        const DiskPoint q = sampler.disk_point();
        const double d = distance_closed_form(p, q);
        const double phi = sampler.uniform(0.0, 2.0 * kPi);
        const double c = std::cos(phi);
        const double s = std::sin(phi);
        const DiskPoint rp(c * p.x() - s * p.y(), s * p.x() + c * p.y());
        const DiskPoint rq(c * q.x() - s * q.y(), s * q.x() + c * q.y());
        worst_rotation =
            std::max(worst_rotation, std::abs(distance_closed_form(rp, rq) - d));
        // Reflection across the line through O at angle phi.
        const double c2 = std::cos(2.0 * phi);
        const double s2 = std::sin(2.0 * phi);
        const DiskPoint mp(c2 * p.x() + s2 * p.y(), s2 * p.x() - c2 * p.y());
        const DiskPoint mq(c2 * q.x() + s2 * q.y(), s2 * q.x() - c2 * q.y());
        worst_reflection =
            std::max(worst_reflection,
                     std::abs(distance_closed_form(mp, mq) - d));
    }
    return finish("isometries",
                  {{"rotation_invariance", worst_rotation <= 1e-9,
                    worst_rotation},
                   {"reflection_invariance", worst_reflection <= 1e-9,
                    worst_reflection}});
}

SuiteReport oracle(std::size_t samples, std::uint64_t seed) {
    Sampler sampler(seed);
    const Generator f = Generator::standard();
    double worst = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        const DiskPoint p = sampler.disk_point();
        const DiskPoint q = sampler.disk_point();
        const double numeric = distance_numeric(f, p, q).value_or_throw();
        worst = std::max(worst, std::abs(distance_closed_form(p, q) - numeric));
    }
    return finish("oracle",
                  {{"closed_form_vs_quadrature", worst <= 1e-8, worst}});
}

SuiteReport origin_bound(std::size_t samples, std::uint64_t seed) {
    Sampler sampler(seed);
    double min_slack = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < samples; ++i) {
        const DiskPoint p = sampler.disk_point(0.95);
        min_slack = std::min(
            min_slack, distance_origin_bound(p) -
                           distance_closed_form(DiskPoint::origin(), p));
    }
    return finish("origin-bound",
                  {{"radial_upper_bound", min_slack >= 0.0, min_slack}});
}

SuiteReport hilbert(std::size_t samples, std::uint64_t seed) {
    const ConvexDomain circle = ConvexDomain::ellipse(1.0, 1.0);
    const PropertyReport circ = hilbert_metric_properties(circle, samples, seed);
    std::vector<PropertyResult> props;
    for (const auto& c : circ.checks)
        props.push_back({"circle_" + c.name, c.passed, c.worst});

    const ConvexDomain square = ConvexDomain::polygon(
        {{-1.0, -1.0}, {1.0, -1.0}, {1.0, 1.0}, {-1.0, 1.0}});
    const double axis = hilbert_distance(square, {0.0, 0.0}, {0.5, 0.0});
    const double err = std::abs(axis - 0.5 * std::log(3.0));
    props.push_back({"square_axis_half_log3", err <= 1e-12, err});
    const PropertyReport sq = hilbert_metric_properties(square, samples, seed);
    for (const auto& c : sq.checks)
        props.push_back({"square_" + c.name, c.passed, c.worst});
    return finish("hilbert", std::move(props));
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"metric-axioms", "additivity", "isometries",
            "oracle",        "origin-bound", "hilbert"};
}

SuiteReport run_suite(const std::string& name, std::size_t samples,
                      std::uint64_t seed) {
    if (samples == 0) throw DomainError("sample count must be positive");
    if (name == "metric-axioms") return metric_axioms(samples, seed);
    if (name == "additivity") return additivity(samples, seed);
    if (name == "isometries") return isometries(samples, seed);
    if (name == "oracle") return oracle(samples, seed);
    if (name == "origin-bound") return origin_bound(samples, seed);
    if (name == "hilbert") return hilbert(samples, seed);
    throw DomainError("unknown suite: " + name);
}

}  // namespace dmetric::suites
