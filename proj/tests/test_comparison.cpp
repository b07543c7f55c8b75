#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <doctest.h>

#include "dmetric/comparison.hpp"

using namespace dmetric;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

TEST_CASE("poincare distance calibration") {
    const HyperbolicModel unit(1.0);
    const DiskPoint o = DiskPoint::origin();
    SUBCASE("ideal triangle height foot") {
        CHECK(std::abs(poincare_distance(unit, o, DiskPoint(kSqrt2 - 1.0, 0.0)) -
                       std::log(1.0 + kSqrt2)) <= 1e-12);
    }
    SUBCASE("radial closed form") {
        for (double r : {0.1, 0.4, 0.8}) {
            CHECK(poincare_distance(unit, o, DiskPoint(r, 0.0)) ==
                  doctest::Approx(std::log((1.0 + r) / (1.0 - r)))
                      .epsilon(1e-13));
        }
    }
    SUBCASE("coincident points and scaling") {
        const DiskPoint p(0.3, -0.2);
        CHECK(poincare_distance(unit, p, p) == 0.0);
        const HyperbolicModel twice(2.0);
        const DiskPoint q(-0.1, 0.5);
        CHECK(poincare_distance(twice, p, q) ==
              doctest::Approx(2.0 * poincare_distance(unit, p, q))
                  .epsilon(1e-15));
    }
    SUBCASE("kappa validation") {
        CHECK_THROWS_AS(HyperbolicModel(0.0), DomainError);
        CHECK_THROWS_AS(HyperbolicModel(-1.0), DomainError);
    }
    SUBCASE("metric axioms and diameter additivity") {
        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> unif(-0.6, 0.6);
        for (int i = 0; i < 100; ++i) {
            const DiskPoint p(unif(rng), unif(rng));
            const DiskPoint q(unif(rng), unif(rng));
            const DiskPoint r(unif(rng), unif(rng));
            CHECK(poincare_distance(unit, p, q) +
                      poincare_distance(unit, q, r) -
                      poincare_distance(unit, p, r) >=
                  -1e-12);
        }
        const DiskPoint a(-0.4, 0.0);
        const DiskPoint b(0.7, 0.0);
        CHECK(std::abs(poincare_distance(unit, a, b) -
                       poincare_distance(unit, a, o) -
                       poincare_distance(unit, o, b)) <= 1e-12);
    }
}

TEST_CASE("hyperbolic height function") {
    CHECK(hyperbolic_height(0.0) == 0.0);
    CHECK(hyperbolic_height(kInf) == std::log(1.0 + kSqrt2));
    CHECK(std::abs(hyperbolic_height((3.0 * kSqrt2 - 2.0) / 2.0 * kPi) -
                   0.8789154496) <= 1e-9);
    CHECK_THROWS_AS(hyperbolic_height(-0.1), DomainError);

    SUBCASE("strictly increasing with limit h(infinity)") {
        const double h_inf = hyperbolic_height(kInf);
        double prev = -1.0;
        for (double b = 0.0; b <= 5.0; b += 0.25) {
            const double h = hyperbolic_height(b);
            CHECK(h > prev);
            prev = h;
        }
        CHECK(std::abs(hyperbolic_height(10.0) - h_inf) <= 1e-8);
        CHECK(std::abs(hyperbolic_height(20.0) - h_inf) <= 5e-16);
        CHECK(std::abs(hyperbolic_height(40.0) - h_inf) <= 5e-16);
    }
}

TEST_CASE("D-metric height function") {
    CHECK(d_metric_height(0.0) == 0.0);
    CHECK(std::abs(d_metric_height(kSqrt2 / 2.0) -
                   (8.0 * std::sqrt(3.0) - 9.0) / 9.0 * kPi) <= 1e-12);
    CHECK(std::abs(d_metric_height(1.0) - (3.0 * kSqrt2 - 2.0) / 2.0 * kPi) <=
          1e-12);
    CHECK_THROWS_AS(d_metric_height(1.5), DomainError);

    SUBCASE("strictly increasing and finite at the ideal triangle") {
        double prev = -1.0;
        for (int i = 0; i <= 100; ++i) {
            const double h = d_metric_height(static_cast<double>(i) / 100.0);
            CHECK(h > prev);
            CHECK(std::isfinite(h));
            prev = h;
        }
        // Both ideal heights finite, yet different metrics disagree.
        CHECK(d_metric_height(1.0) != hyperbolic_height(kInf));
    }
}

TEST_CASE("kappa obstruction report") {
    const auto report = kappa_obstruction();
    CHECK(report.kappa0 ==
          doctest::Approx((3.0 * kSqrt2 - 2.0) * kPi /
                          (2.0 * std::log(1.0 + kSqrt2)))
              .epsilon(1e-12));
    CHECK(std::abs(report.kappa0 - 3.9969) <= 1e-3);
    CHECK(std::abs(report.rho - 1.9287) <= 1e-3);
    CHECK(report.kappa0_exceeds_3);
    CHECK(report.rho_below_3);
    CHECK(report.kappa0 - report.rho > 2.0);
    CHECK(report.verdict.find("not isometric") != std::string::npos);
}

TEST_CASE("hilbert distance on the circular domain") {
    const ConvexDomain circle = ConvexDomain::ellipse(1.0, 1.0);
    SUBCASE("radial half-log cross-ratio") {
        for (double r : {0.1, 0.5, 0.9}) {
            CHECK(std::abs(hilbert_distance(circle, {0.0, 0.0}, {r, 0.0}) -
                           0.5 * std::log((1.0 + r) / (1.0 - r))) <= 1e-12);
        }
        CHECK(hilbert_distance(circle, {0.0, 0.0}, {0.5, 0.0}) ==
              doctest::Approx(0.549306).epsilon(1e-6));
    }
    SUBCASE("coincident points") {
        CHECK(hilbert_distance(circle, {0.2, 0.3}, {0.2, 0.3}) == 0.0);
    }
    SUBCASE("rotation invariance about the center") {
        const double base = hilbert_distance(circle, {0.1, 0.2}, {-0.3, 0.4});
        for (double phi : {0.5, 1.7, 3.9}) {
            const double c = std::cos(phi), s = std::sin(phi);
            const Vec2 p{c * 0.1 - s * 0.2, s * 0.1 + c * 0.2};
            const Vec2 q{c * -0.3 - s * 0.4, s * -0.3 + c * 0.4};
            CHECK(std::abs(hilbert_distance(circle, p, q) - base) <= 1e-12);
        }
    }
    SUBCASE("outside-domain rejection") {
        CHECK_THROWS_AS(hilbert_distance(circle, {0.0, 0.0}, {1.5, 0.0}),
                        OutsideDomain);
        CHECK_THROWS_AS(hilbert_distance(circle, {1.0, 0.0}, {0.0, 0.0}),
                        OutsideDomain);
    }
}

TEST_CASE("hilbert distance on polygons") {
    const ConvexDomain square = ConvexDomain::polygon(
        {{-1.0, -1.0}, {1.0, -1.0}, {1.0, 1.0}, {-1.0, 1.0}});
    SUBCASE("axis chord matches the circle structure") {
        CHECK(std::abs(hilbert_distance(square, {0.0, 0.0}, {0.5, 0.0}) -
                       0.5 * std::log(3.0)) <= 1e-12);
    }
    SUBCASE("invalid polygons rejected") {
        CHECK_THROWS_AS(ConvexDomain::polygon({{0.0, 0.0}, {1.0, 0.0}}),
                        DomainError);
        // Clockwise orientation.
        CHECK_THROWS_AS(ConvexDomain::polygon(
                            {{-1.0, -1.0}, {-1.0, 1.0}, {1.0, 1.0},
                             {1.0, -1.0}}),
                        DomainError);
        // Collinear vertex.
        CHECK_THROWS_AS(ConvexDomain::polygon(
                            {{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}, {1.0, 1.0}}),
                        DomainError);
    }
    SUBCASE("ellipse parameters validated") {
        CHECK_THROWS_AS(ConvexDomain::ellipse(0.0, 1.0), DomainError);
    }
}

TEST_CASE("hilbert property report") {
    const ConvexDomain circle = ConvexDomain::ellipse(1.0, 1.0);
    const auto report = hilbert_metric_properties(circle, 200, 42);
    CHECK(report.passed);
    bool saw_margin = false;
    for (const auto& check : report.checks) {
        CHECK(check.passed);
        if (check.name == "two_radius_non_proportionality") {
            saw_margin = true;
            CHECK(check.worst > 0.1);
        }
    }
    CHECK(saw_margin);
    CHECK_THROWS_AS(hilbert_metric_properties(circle, 5, 42), DomainError);
}
