#include "dmetric/core_metric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

namespace dmetric {
namespace {

constexpr double kPi = std::numbers::pi;

double standard_f(double t) { return t / (1.0 - std::abs(t)); }

double wrap_half_turn(double angle) {
    double a = std::fmod(angle, kPi);
    if (a < 0.0) a += kPi;
    return a;
}

// Exact integral of 1 / (1 - rho * cos(theta - psi)) over [a, b], 0 <= rho < 1.
// The antiderivative (2 / sqrt(1 - rho^2)) atan(K tan(u / 2)) jumps by
// 2 pi / sqrt(1 - rho^2) at each odd multiple of pi of u = theta - psi.
double reciprocal_cos_integral(double rho, double psi, double a, double b) {
    const double u1 = a - psi;
    const double u2 = b - psi;
    const double scale = 2.0 / std::sqrt(1.0 - rho * rho);
    const double k = std::sqrt((1.0 + rho) / (1.0 - rho));
    const auto antider = [&](double u) { return std::atan(k * std::tan(0.5 * u)); };
    const double crossings = std::floor((u2 - kPi) / (2.0 * kPi)) -
                             std::floor((u1 - kPi) / (2.0 * kPi));
    return scale * (antider(u2) - antider(u1) + crossings * kPi);
}

}  // namespace

Generator Generator::standard() {
    return Generator(Kind::Standard, standard_f, "t / (1 - |t|)");
}

Generator Generator::custom(std::function<double(double)> eval,
                            std::string description) {
    return Generator(Kind::Custom, std::move(eval), std::move(description));
}

double Generator::operator()(double t) const {
    if (!(std::abs(t) < 1.0))
        throw DomainError("generator argument must satisfy |t| < 1");
    return eval_(t);
}

double generator_eval(const Generator& g, double t) { return g(t); }

double interval_distance(const Generator& g, double s, double t) {
    return std::abs(g(s) - g(t));
}

DirectionalProjection project(const DiskPoint& p, double theta) {
    return {theta, p.x() * std::cos(theta) + p.y() * std::sin(theta)};
}

double directional_distance(const Generator& g, const DiskPoint& p,
                            const DiskPoint& q, double theta) {
    return interval_distance(g, project(p, theta).value, project(q, theta).value);
}

std::vector<double> kink_angles(const DiskPoint& p, const DiskPoint& q) {
    const double vectors[3][2] = {{p.x(), p.y()},
                                  {q.x(), q.y()},
                                  {p.x() - q.x(), p.y() - q.y()}};
    std::vector<double> angles;
    for (const auto& v : vectors) {
        if (v[0] == 0.0 && v[1] == 0.0) continue;
        const double a = wrap_half_turn(std::atan2(v[1], v[0]) + 0.5 * kPi);
        if (a > 1e-13 && a < kPi - 1e-13) angles.push_back(a);
    }
    std::sort(angles.begin(), angles.end());
    angles.erase(std::unique(angles.begin(), angles.end(),
                             [](double a, double b) { return b - a < 1e-13; }),
                 angles.end());
    return angles;
}

quadrature::QuadratureResult distance_numeric(const Generator& g,
                                              const DiskPoint& p,
                                              const DiskPoint& q, double tol) {
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    if (p == q) return {0.0, 0.0, 0, true};
    quadrature::IntegrandSpec spec{
        [&](double theta) { return directional_distance(g, p, q, theta); },
        kink_angles(p, q)};
    return quadrature::integrate(spec, 0.0, kPi, tol, tol);
}

double distance_closed_form(const DiskPoint& p, const DiskPoint& q) {
    if (p == q) return 0.0;
    // Canonical argument order makes the evaluation exactly symmetric.
    const DiskPoint* lo = &p;
    const DiskPoint* hi = &q;
    if (std::make_pair(hi->x(), hi->y()) < std::make_pair(lo->x(), lo->y()))
        std::swap(lo, hi);

    const double rho_a = lo->norm();
    const double phi_a = lo->arg();
    const double rho_b = hi->norm();
    const double phi_b = hi->arg();

    std::vector<double> nodes = {0.0};
    for (double a : kink_angles(*lo, *hi)) nodes.push_back(a);
    nodes.push_back(kPi);

    // On each kink-free piece, f(rho cos(theta - phi)) reduces to
    // eps * [1 / (1 - rho cos(theta - psi)) - 1] with constant sign eps.
    const auto piece_integral = [](double rho, double phi, double a, double b,
                                   double mid) {
        if (rho == 0.0) return 0.0;
        const double eps = rho * std::cos(mid - phi) >= 0.0 ? 1.0 : -1.0;
        const double psi = eps > 0.0 ? phi : phi + kPi;
        return eps * (reciprocal_cos_integral(rho, psi, a, b) - (b - a));
    };

    double total = 0.0;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        const double a = nodes[i];
        const double b = nodes[i + 1];
        const double mid = 0.5 * (a + b);
        const double fa = standard_f(rho_a * std::cos(mid - phi_a));
        const double fb = standard_f(rho_b * std::cos(mid - phi_b));
        const double sigma = fa >= fb ? 1.0 : -1.0;
        total += sigma * (piece_integral(rho_a, phi_a, a, b, mid) -
                          piece_integral(rho_b, phi_b, a, b, mid));
    }
    return total;
}

double distance_origin_bound(const DiskPoint& p) {
    const double r = p.norm();
    return kPi * r / (1.0 - r);
}

ValidationReport validate_generator(const Generator& g, std::size_t samples) {
    if (samples < 2) throw DomainError("need at least 2 validation samples");

    ValidationReport report;
    report.monotone = true;
    double prev = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        const double t =
            -1.0 + 2.0 * (static_cast<double>(i) + 1.0) /
                       (static_cast<double>(samples) + 1.0);
        double v;
        try {
            v = g(t);
        } catch (const DomainError&) {
            throw;
        } catch (const std::exception&) {
            throw DomainError("generator cannot be evaluated on (-1, 1)");
        }
        if (!std::isfinite(v)) throw DomainError("generator value not finite");
        if (i > 0 && !(v > prev)) report.monotone = false;
        prev = v;
    }

    // Probe the boundary divergence of the circular integral of |g(t cos th)|
    // along t = 1 - 10^-k. "Unbounded" is judged by strict growth together
    // with the last sample exceeding twice the first.
    for (int k = 2; k <= 6; ++k) {
        const double t = 1.0 - std::pow(10.0, -k);
        quadrature::IntegrandSpec spec{
            [&](double theta) { return std::abs(g(t * std::cos(theta))); },
            {0.5 * kPi, 1.5 * kPi}};
        report.divergence_samples.push_back(
            quadrature::integrate(spec, 0.0, 2.0 * kPi, 1e-6, 1e-9).value);
    }
    bool increasing = true;
    for (std::size_t i = 1; i < report.divergence_samples.size(); ++i)
        if (!(report.divergence_samples[i] > report.divergence_samples[i - 1]))
            increasing = false;
    report.divergence =
        increasing && report.divergence_samples.back() >
                          2.0 * report.divergence_samples.front();
    return report;
}

}  // namespace dmetric
