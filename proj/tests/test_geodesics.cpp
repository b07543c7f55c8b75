#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "dmetric/geodesics.hpp"
#include "dmetric/quadrature.hpp"
#include "test_helpers.hpp"

using namespace dmetric;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

// Analytic value of the ray divergence profile (via the -cot(theta/2)
// antiderivative).
double ray_profile_exact(double eps) {
    return 2.0 / std::tan(0.5 * eps) - 2.0 - kPi + 2.0 * eps;
}
}  // namespace

TEST_CASE("boundary point canonicalization") {
    CHECK(BoundaryPoint(2.0 * kPi + 0.5).angle() ==
          doctest::Approx(0.5).epsilon(1e-14));
    CHECK(BoundaryPoint(-0.5).angle() ==
          doctest::Approx(2.0 * kPi - 0.5).epsilon(1e-14));
    CHECK(BoundaryPoint(0.0).x() == 1.0);
}

TEST_CASE("chord through two interior points") {
    SUBCASE("x-diameter") {
        const Chord c = chord_through(DiskPoint::origin(), DiskPoint(0.5, 0.0));
        CHECK(c.first().angle() == doctest::Approx(kPi).epsilon(1e-12));
        CHECK(c.second().angle() == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("line x + y = 0.5") {
        const Chord c = chord_through(DiskPoint(0.0, 0.5), DiskPoint(0.5, 0.0));
        for (const BoundaryPoint& e : {c.first(), c.second()}) {
            CHECK(std::abs(std::hypot(e.x(), e.y()) - 1.0) <= 1e-12);
            CHECK(std::abs(e.x() + e.y() - 0.5) <= 1e-12);
        }
        CHECK(c.first().angle() != c.second().angle());
    }
    SUBCASE("degenerate input") {
        const DiskPoint p(0.1, 0.2);
        CHECK_THROWS_AS(chord_through(p, p), DegenerateInput);
    }
}

TEST_CASE("D-length along a chord") {
    const Chord axis = chord_through(DiskPoint(-0.3, 0.0), DiskPoint(0.6, 0.0));
    const DiskPoint o = DiskPoint::origin();
    CHECK(d_length_along(axis, o, o) == 0.0);
    CHECK(std::abs(d_length_along(axis, o, DiskPoint(0.5, 0.0)) -
                   (8.0 * std::sqrt(3.0) - 9.0) / 9.0 * kPi) <= 1e-12);
    // Additivity through the origin.
    const DiskPoint a(-0.3, 0.0);
    const DiskPoint b(0.6, 0.0);
    CHECK(std::abs(d_length_along(axis, a, b) - d_length_along(axis, a, o) -
                   d_length_along(axis, o, b)) <= 1e-9);
    CHECK_THROWS_AS(d_length_along(axis, DiskPoint(0.0, 0.1), b), OffChord);
}

TEST_CASE("chord geodesy across three parameters") {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> unif(0.15, 0.85);
    const Chord c = chord_through(DiskPoint(-0.4, 0.2), DiskPoint(0.5, -0.3));
    for (int i = 0; i < 50; ++i) {
        double t1 = unif(rng), t2 = unif(rng), t3 = unif(rng);
        if (t1 > t2) std::swap(t1, t2);
        if (t2 > t3) std::swap(t2, t3);
        if (t1 > t2) std::swap(t1, t2);
        const DiskPoint p1 = c.point_at(t1);
        const DiskPoint p2 = c.point_at(t2);
        const DiskPoint p3 = c.point_at(t3);
        CHECK(std::abs(distance_closed_form(p1, p3) -
                       distance_closed_form(p1, p2) -
                       distance_closed_form(p2, p3)) <= 1e-8);
    }
}

TEST_CASE("arc-length parametrization inverts the distance") {
    const GeodesicRay ray(DiskPoint::origin(), BoundaryPoint(0.0));
    CHECK(point_at_d_length(ray, 0.0) == DiskPoint::origin());

    const DiskPoint at_half =
        point_at_d_length(ray, (8.0 * std::sqrt(3.0) - 9.0) / 9.0 * kPi, 1e-10);
    CHECK(std::abs(at_half.x() - 0.5) <= 1e-8);
    CHECK(std::abs(at_half.y()) <= 1e-12);

    const DiskPoint at_diag =
        point_at_d_length(ray, (3.0 * kSqrt2 - 2.0) / 2.0 * kPi, 1e-10);
    CHECK(std::abs(at_diag.x() - kSqrt2 / 2.0) <= 1e-8);

    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> unif(0.0, 50.0);
    const GeodesicRay skew(DiskPoint(0.1, -0.2), BoundaryPoint(2.1));
    for (int i = 0; i < 25; ++i) {
        const double s = unif(rng);
        const DiskPoint p = point_at_d_length(skew, s, 1e-9);
        CHECK(std::abs(distance_closed_form(skew.origin(), p) - s) <= 1e-9);
    }
}

TEST_CASE("ray divergence profile") {
    SUBCASE("matches the cot antiderivative") {
        for (double eps : {0.1, 0.01, 0.001}) {
            CHECK(std::abs(divergence_profile_ray(BoundaryPoint(0.0), eps) -
                           ray_profile_exact(eps)) <= 1e-6);
        }
        CHECK(ray_profile_exact(0.1) == doctest::Approx(35.0251).epsilon(1e-4));
    }
    SUBCASE("strictly decreasing in epsilon, exceeding 1e3 at 1e-3") {
        const double v1 = divergence_profile_ray(BoundaryPoint(0.7), 0.1);
        const double v2 = divergence_profile_ray(BoundaryPoint(0.7), 0.01);
        const double v3 = divergence_profile_ray(BoundaryPoint(0.7), 0.001);
        CHECK(v2 > v1);
        CHECK(v3 > v2);
        CHECK(v3 > 1e3);
    }
    SUBCASE("rotation invariance in the boundary angle") {
        const double base = divergence_profile_ray(BoundaryPoint(0.0), 0.1);
        for (double a : {0.3, 1.234, 2.9, 4.5}) {
            CHECK(std::abs(divergence_profile_ray(BoundaryPoint(a), 0.1) -
                           base) <= 1e-9);
        }
    }
    SUBCASE("epsilon domain") {
        CHECK_THROWS_AS(divergence_profile_ray(BoundaryPoint(0.0), 0.0),
                        DomainError);
        CHECK_THROWS_AS(divergence_profile_ray(BoundaryPoint(0.0), 1.0),
                        DomainError);
    }
}

TEST_CASE("chord divergence profile") {
    SUBCASE("diameter doubles the ray profile") {
        const BoundaryPoint xi(0.3);
        const BoundaryPoint eta(0.3 + kPi);
        const double chord = divergence_profile_chord(xi, eta, 0.1);
        const double ray = divergence_profile_ray(xi, 0.1);
        CHECK(std::abs(chord - 2.0 * ray) <= 1e-8);
    }
    SUBCASE("monotone growth") {
        const BoundaryPoint xi(0.2);
        const BoundaryPoint eta(1.9);
        CHECK(divergence_profile_chord(xi, eta, 0.01) >
              divergence_profile_chord(xi, eta, 0.1));
    }
    SUBCASE("degenerate input") {
        CHECK_THROWS_AS(
            divergence_profile_chord(BoundaryPoint(0.4), BoundaryPoint(0.4),
                                     0.1),
            DegenerateInput);
    }
}

TEST_CASE("ray gap three-branch formula") {
    const Generator f = Generator::standard();
    SUBCASE("first branch equals the factored simplification") {
        for (double lambda : {1.0, 1.5, 2.0}) {
            for (double x : {0.3, 0.5, 0.7}) {
                const double ay = lambda * (1.0 - x);
                if (x * x + ay * ay >= 1.0) continue;
                for (double theta : {0.1, 0.6, 1.2, 1.5}) {
                    const double simplified =
                        lambda * (1.0 - x) * std::sin(theta) /
                        ((1.0 - x * std::cos(theta)) *
                         (1.0 - x * std::cos(theta) -
                          lambda * (1.0 - x) * std::sin(theta)));
                    CHECK(std::abs(ray_gap_dtheta(lambda, x, theta) -
                                   simplified) <= 1e-12);
                }
            }
        }
    }
    SUBCASE("all three branches match the general evaluator") {
        const double lambda = 1.0;
        const double x = 0.5;
        const DiskPoint a(x, lambda * (1.0 - x));
        const DiskPoint b(x, 0.0);
        for (int i = 1; i < 40; ++i) {
            const double theta = kPi * static_cast<double>(i) / 40.0;
            CHECK(std::abs(ray_gap_dtheta(lambda, x, theta) -
                           directional_distance(f, a, b, theta)) <= 1e-12);
        }
    }
    SUBCASE("outside-disk rejection") {
        CHECK_THROWS_AS(ray_gap_dtheta(3.0, 0.5, 0.3), DomainError);
    }
}

TEST_CASE("ray gap profile") {
    SUBCASE("scaling limit toward the boundary") {
        const double x = 1.0 - 1e-6;
        const auto prof = ray_gap_profile(1.0, x);
        CHECK(std::abs(std::sqrt(1.0 - x) * prof.phi_max - kSqrt2 / 2.0) <=
              2e-3);
    }
    SUBCASE("maximum at omega_x") {
        const double lambda = 1.2;
        const double x = 0.6;
        const auto prof = ray_gap_profile(lambda, x);
        CHECK(prof.omega_x == doctest::Approx(std::acos(x)).epsilon(1e-14));
        const auto phi = [&](double theta) {
            return std::sin(theta) /
                   (1.0 - x * std::cos(theta) -
                    lambda * (1.0 - x) * std::sin(theta));
        };
        for (int i = 1; i <= 50; ++i) {
            const double theta = 0.5 * kPi * static_cast<double>(i) / 51.0;
            CHECK(prof.phi_max + 1e-12 >= phi(theta));
        }
    }
    SUBCASE("omega tends to pi/2 as x -> 0") {
        CHECK(ray_gap_profile(1.0, 1e-9).omega_x ==
              doctest::Approx(0.5 * kPi).epsilon(1e-8));
    }
}

TEST_CASE("hausdorff estimates") {
    const GeodesicRay r1(DiskPoint::origin(), BoundaryPoint(0.0));
    SUBCASE("identical rays") {
        const auto est = hausdorff_distance_rays(r1, r1, 32, 1e-6, 0.999);
        // Near the cutoff the metric is steep (f' ~ (1 - r)^-2), so the
        // parameter-space search tolerance inflates in distance.
        CHECK(est.value <= 1e-2);
    }
    SUBCASE("symmetry within reported resolution") {
        const GeodesicRay r2(DiskPoint(0.1, 0.2), BoundaryPoint(0.0));
        const auto a = hausdorff_distance_rays(r1, r2, 32, 1e-6, 0.999);
        const auto b = hausdorff_distance_rays(r2, r1, 32, 1e-6, 0.999);
        CHECK(a.value == doctest::Approx(b.value).epsilon(1e-12));
    }
    SUBCASE("grid validation") {
        CHECK_THROWS_AS(hausdorff_distance_rays(r1, r1, 8, 1e-6), DomainError);
    }
}

TEST_CASE("asymptotic rays share their ideal endpoint") {
    const GeodesicRay r1(DiskPoint::origin(), BoundaryPoint(0.0));
    const GeodesicRay r2(DiskPoint(0.1, 0.3), BoundaryPoint(0.0));
    const GeodesicRay r3(DiskPoint::origin(), BoundaryPoint(kPi));
    CHECK(are_asymptotic(r1, r2));
    CHECK(are_asymptotic(r1, r1));
    CHECK_FALSE(are_asymptotic(r1, r3));
    // Canonicalized angle comparison.
    const GeodesicRay r4(DiskPoint(0.2, -0.1), BoundaryPoint(2.0 * kPi));
    CHECK(are_asymptotic(r1, r4));
}
