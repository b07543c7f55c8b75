#include "dmetric/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace dmetric::quadrature {
namespace {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1]. Nodes with odd index are
// the embedded 7-point Gauss nodes.
constexpr std::array<double, 8> kNodes = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
constexpr std::array<double, 8> kKronrodWeights = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
constexpr std::array<double, 4> kGaussWeights = {
    0.1294849661688697, 0.2797053914892766, 0.3818300505051189,
    0.4179591836734694};

struct Panel {
    double value;
    double error;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(mid);
    double kronrod = kKronrodWeights[7] * fc;
    double gauss = kGaussWeights[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kNodes[j];
        const double f1 = f(mid - dx);
        const double f2 = f(mid + dx);
        kronrod += kKronrodWeights[j] * (f1 + f2);
        if (j % 2 == 1) gauss += kGaussWeights[j / 2] * (f1 + f2);
    }
    return {kronrod * half, std::abs((kronrod - gauss) * half)};
}

struct HeapPanel {
    double a;
    double b;
    double value;
    double error;
    int depth;
    bool operator<(const HeapPanel& other) const {
        return error < other.error;  // max-heap on the error estimate
    }
};

std::vector<double> clipped_breakpoints(const IntegrandSpec& spec, double a,
                                        double b) {
    std::vector<double> pts;
    double prev = a;
    for (double x : spec.breakpoints) {
        if (x <= a || x >= b) continue;
        if (x <= prev)
            throw Error("breakpoints must be strictly increasing");
        pts.push_back(x);
        prev = x;
    }
    return pts;
}

// Global worst-first refinement: keep a max-heap of panels ordered by their
// local error estimate and bisect the worst one until the summed error meets
// the tolerance or the budgets run out.
QuadratureResult integrate_pieces(const IntegrandSpec& spec,
                                  const std::vector<std::pair<double, double>>& pieces,
                                  double abs_tol, double rel_tol) {
    constexpr std::size_t kMaxPanels = 20000;

    std::vector<HeapPanel> heap;
    std::vector<HeapPanel> frozen;  // panels at maximal depth
    double value = 0.0;
    double error = 0.0;

    const auto push = [&](double a, double b, int depth) {
        const Panel p = gk15(spec.eval, a, b);
        heap.push_back({a, b, p.value, p.error, depth});
        std::push_heap(heap.begin(), heap.end());
        value += p.value;
        error += p.error;
    };

    for (const auto& [lo, hi] : pieces) {
        std::vector<double> nodes = {lo};
        for (double x : clipped_breakpoints(spec, lo, hi)) nodes.push_back(x);
        nodes.push_back(hi);
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
            push(nodes[i], nodes[i + 1], 0);
    }

    bool depth_exhausted = false;
    const auto tolerance = [&] {
        return std::max(abs_tol, rel_tol * std::abs(value));
    };
    while (error > tolerance() && !heap.empty() &&
           heap.size() + frozen.size() < kMaxPanels) {
        std::pop_heap(heap.begin(), heap.end());
        const HeapPanel worst = heap.back();
        heap.pop_back();
        if (worst.depth >= kMaxDepth) {
            depth_exhausted = true;
            frozen.push_back(worst);
            continue;
        }
        value -= worst.value;
        error -= worst.error;
        const double mid = 0.5 * (worst.a + worst.b);
        push(worst.a, mid, worst.depth + 1);
        push(mid, worst.b, worst.depth + 1);
    }

    QuadratureResult result;
    result.value = value;
    result.abs_error_estimate = error;
    result.subintervals_used = heap.size() + frozen.size();
    result.converged = !depth_exhausted && error <= tolerance();
    return result;
}

}  // namespace

QuadratureResult integrate(const IntegrandSpec& spec, double a, double b,
                           double abs_tol, double rel_tol) {
    if (!(a < b)) throw InvalidInterval("integration interval requires a < b");
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
        throw DomainError("tolerances must be positive");
    return integrate_pieces(spec, {{a, b}}, abs_tol, rel_tol);
}

QuadratureResult integrate_excluding(
    const IntegrandSpec& spec, double a, double b,
    const std::vector<std::pair<double, double>>& windows, double abs_tol,
    double rel_tol) {
    if (!(a < b)) throw InvalidInterval("integration interval requires a < b");
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
        throw DomainError("tolerances must be positive");

    // Merge overlapping windows, clip to [a, b], then take the complement.
    std::vector<std::pair<double, double>> cuts;
    for (auto [lo, hi] : windows) {
        lo = std::max(lo, a);
        hi = std::min(hi, b);
        if (lo < hi) cuts.emplace_back(lo, hi);
    }
    std::sort(cuts.begin(), cuts.end());
    std::vector<std::pair<double, double>> merged;
    for (const auto& w : cuts) {
        if (!merged.empty() && w.first <= merged.back().second)
            merged.back().second = std::max(merged.back().second, w.second);
        else
            merged.push_back(w);
    }

    constexpr double kMinPiece = 1e-14;
    std::vector<std::pair<double, double>> pieces;
    double cursor = a;
    for (const auto& [lo, hi] : merged) {
        if (lo - cursor > kMinPiece) pieces.emplace_back(cursor, lo);
        cursor = hi;
    }
    if (b - cursor > kMinPiece) pieces.emplace_back(cursor, b);

    if (pieces.empty())
        throw WindowCoversInterval(
            "excluded windows cover the whole integration interval");
    return integrate_pieces(spec, pieces, abs_tol, rel_tol);
}

QuadratureResult integrate_truncated_singular(const IntegrandSpec& spec,
                                              double a, double b,
                                              double cut_center,
                                              double epsilon, double abs_tol) {
    if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
    return integrate_excluding(
        spec, a, b, {{cut_center - epsilon, cut_center + epsilon}}, abs_tol,
        kDefaultRelTol);
}

}  // namespace dmetric::quadrature
