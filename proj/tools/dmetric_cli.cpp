// Command-line front end for the disk-metric library: distances, height
// tables, property-suite checks, divergence profiles, Hausdorff estimates,
// and distance-field grids, all with deterministic machine-readable output.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dmetric/comparison.hpp"
#include "dmetric/core_metric.hpp"
#include "dmetric/errors.hpp"
#include "dmetric/geodesics.hpp"
#include "dmetric/suites.hpp"

namespace {

using namespace dmetric;

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitNonConvergence = 3;

// Fixed-format numeric rendering: 16 significant digits, deterministic.
std::string num(double v) {
    if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15e", v);
    return buf;
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

// Minimal ordered JSON assembler; values are pre-rendered fragments.
class JsonObject {
  public:
    void add(const std::string& key, const std::string& rendered_value) {
        parts_.push_back(quoted(key) + ": " + rendered_value);
    }
    void add_num(const std::string& key, double v) { add(key, num(v)); }
    void add_str(const std::string& key, const std::string& v) {
        add(key, quoted(v));
    }
    void add_bool(const std::string& key, bool v) {
        add(key, v ? "true" : "false");
    }
    void add_int(const std::string& key, long long v) {
        add(key, std::to_string(v));
    }
    std::string str() const {
        std::string out = "{";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ", ";
            out += parts_[i];
        }
        return out + "}";
    }

  private:
    std::vector<std::string> parts_;
};

std::string json_array(const std::vector<std::string>& rendered) {
    std::string out = "[";
    for (std::size_t i = 0; i < rendered.size(); ++i) {
        if (i) out += ", ";
        out += rendered[i];
    }
    return out + "]";
}

struct RunConfig {
    double tolerance = 1e-10;
    std::string method = "closed";     // closed | quadrature | both
    std::string generator = "standard";  // standard | custom-spec
    std::string format = "json";       // json | csv | plain
    std::uint64_t seed = 42;
    bool degrees = false;
};

double to_radians(const RunConfig& cfg, double angle) {
    return cfg.degrees ? angle * kPi / 180.0 : angle;
}

Generator make_generator(const RunConfig& cfg) {
    if (cfg.generator == "standard") return Generator::standard();
    // The bundled custom generator: strictly increasing, odd, and divergent
    // toward the boundary, exercising the generalized (numeric-only) path.
    return Generator::custom(
        [](double t) { return std::tan(0.5 * kPi * t); }, "tan(pi*t/2)");
}

std::string config_json(const RunConfig& cfg, const std::string& command) {
    JsonObject c;
    c.add_num("tolerance", cfg.tolerance);
    c.add_str("method", cfg.method);
    c.add_str("generator", cfg.generator);
    c.add_str("format", cfg.format);
    c.add_int("seed", static_cast<long long>(cfg.seed));
    c.add_bool("degrees", cfg.degrees);
    (void)command;
    return c.str();
}

void emit_record(const RunConfig& cfg, const std::string& command,
                 const JsonObject& results, const JsonObject& diagnostics) {
    JsonObject top;
    top.add_str("command", command);
    top.add("config", config_json(cfg, command));
    top.add("results", results.str());
    top.add("diagnostics", diagnostics.str());
    std::cout << top.str() << "\n";
}

// ---------------------------------------------------------------- dist ----

int cmd_dist(const RunConfig& cfg, double x1, double y1, double x2,
             double y2) {
    const DiskPoint p(x1, y1);
    const DiskPoint q(x2, y2);

    std::optional<double> closed;
    std::optional<double> numeric;
    std::size_t subintervals = 0;
    if (cfg.method == "closed" || cfg.method == "both") {
        if (cfg.generator != "standard")
            throw DomainError(
                "closed-form evaluation requires the standard generator");
        closed = distance_closed_form(p, q);
    }
    if (cfg.method == "quadrature" || cfg.method == "both") {
        const auto r =
            distance_numeric(make_generator(cfg), p, q, cfg.tolerance);
        numeric = r.value_or_throw();
        subintervals = r.subintervals_used;
    }
    const double value = closed ? *closed : *numeric;

    if (cfg.format == "plain" || cfg.format == "csv") {
        std::cout << "distance " << num(value).c_str() << "\n";
        if (closed && numeric)
            std::cout << "discrepancy " << num(std::abs(*closed - *numeric))
                      << "\n";
        return kExitOk;
    }

    JsonObject results;
    results.add_num("distance", value);
    if (closed) results.add_num("closed_form", *closed);
    if (numeric) results.add_num("quadrature", *numeric);
    if (closed && numeric)
        results.add_num("discrepancy", std::abs(*closed - *numeric));
    JsonObject diag;
    diag.add_int("subintervals", static_cast<long long>(subintervals));
    emit_record(cfg, "dist", results, diag);
    return kExitOk;
}

// -------------------------------------------------------------- heights ----

int cmd_heights(const RunConfig& cfg) {
    const double h_inf =
        hyperbolic_height(std::numeric_limits<double>::infinity());
    const double hd_mid = d_metric_height(kSqrt2 / 2.0);
    const double hd_one = d_metric_height(1.0);
    const double h_of_d = hyperbolic_height(hd_one);
    const auto obstruction = kappa_obstruction();

    if (cfg.format == "plain" || cfg.format == "csv") {
        std::cout << "h_infinity " << num(h_inf) << "\n"
                  << "hD_sqrt2_over_2 " << num(hd_mid) << "\n"
                  << "hD_1 " << num(hd_one) << "\n"
                  << "h_of_D_origin_sqrt2_over_2 " << num(h_of_d) << "\n"
                  << "kappa0 " << num(obstruction.kappa0) << "\n"
                  << "rho " << num(obstruction.rho) << "\n"
                  << "verdict " << obstruction.verdict << "\n";
        return kExitOk;
    }

    JsonObject results;
    results.add_num("h_infinity", h_inf);
    results.add_num("hD_sqrt2_over_2", hd_mid);
    results.add_num("hD_1", hd_one);
    results.add_num("h_of_D_origin_sqrt2_over_2", h_of_d);
    results.add_num("kappa0", obstruction.kappa0);
    results.add_num("rho", obstruction.rho);
    results.add_bool("kappa0_exceeds_3", obstruction.kappa0_exceeds_3);
    results.add_bool("rho_below_3", obstruction.rho_below_3);
    results.add_str("verdict", obstruction.verdict);
    JsonObject diag;
    emit_record(cfg, "heights", results, diag);
    return kExitOk;
}

// ---------------------------------------------------------------- check ----

int cmd_check(const RunConfig& cfg, const std::string& suite,
              std::size_t samples) {
    const auto report = suites::run_suite(suite, samples, cfg.seed);

    if (cfg.format == "plain" || cfg.format == "csv") {
        for (const auto& p : report.properties)
            std::cout << p.name << " " << (p.passed ? "pass" : "fail") << " "
                      << num(p.worst) << "\n";
        std::cout << "suite " << (report.passed ? "pass" : "fail") << "\n";
        return report.passed ? kExitOk : kExitPropertyFailure;
    }

    std::vector<std::string> props;
    for (const auto& p : report.properties) {
        JsonObject entry;
        entry.add_str("name", p.name);
        entry.add_bool("passed", p.passed);
        entry.add_num("worst", p.worst);
        props.push_back(entry.str());
    }
    JsonObject results;
    results.add_str("suite", report.suite);
    results.add_bool("passed", report.passed);
    results.add("properties", json_array(props));
    JsonObject diag;
    diag.add_int("samples", static_cast<long long>(samples));
    emit_record(cfg, "check", results, diag);
    return report.passed ? kExitOk : kExitPropertyFailure;
}

// -------------------------------------------------------------- diverge ----

int cmd_diverge(const RunConfig& cfg, const std::string& mode,
                const std::vector<double>& angles,
                std::vector<double> epsilons) {
    if (epsilons.empty()) epsilons = {0.1, 0.01, 0.001};
    for (std::size_t i = 1; i < epsilons.size(); ++i)
        if (!(epsilons[i] < epsilons[i - 1]))
            throw DomainError("epsilon list must be strictly decreasing");

    std::vector<double> values;
    if (mode == "ray") {
        if (angles.size() != 1)
            throw DomainError("ray mode takes exactly one boundary angle");
        const BoundaryPoint xi(to_radians(cfg, angles[0]));
        for (double eps : epsilons)
            values.push_back(divergence_profile_ray(xi, eps));
    } else if (mode == "chord") {
        if (angles.size() != 2)
            throw DomainError("chord mode takes exactly two boundary angles");
        const BoundaryPoint xi(to_radians(cfg, angles[0]));
        const BoundaryPoint eta(to_radians(cfg, angles[1]));
        for (double eps : epsilons)
            values.push_back(divergence_profile_chord(xi, eta, eps));
    } else {
        throw DomainError("mode must be 'ray' or 'chord'");
    }

    if (cfg.format == "csv") {
        std::cout << "epsilon,value\n";
        for (std::size_t i = 0; i < epsilons.size(); ++i)
            std::cout << num(epsilons[i]) << "," << num(values[i]) << "\n";
        return kExitOk;
    }
    if (cfg.format == "plain") {
        for (std::size_t i = 0; i < epsilons.size(); ++i)
            std::cout << num(epsilons[i]) << " " << num(values[i]) << "\n";
        return kExitOk;
    }

    std::vector<std::string> rows;
    for (std::size_t i = 0; i < epsilons.size(); ++i) {
        JsonObject row;
        row.add_num("epsilon", epsilons[i]);
        row.add_num("value", values[i]);
        rows.push_back(row.str());
    }
    JsonObject results;
    results.add_str("mode", mode);
    results.add("rows", json_array(rows));
    JsonObject diag;
    emit_record(cfg, "diverge", results, diag);
    return kExitOk;
}

// ------------------------------------------------------------ hausdorff ----

int cmd_hausdorff(const RunConfig& cfg, double x1, double y1, double end1,
                  double x2, double y2, double end2,
                  std::vector<double> cutoffs, std::size_t grid) {
    if (cutoffs.empty()) cutoffs = {0.999, 0.9999, 0.99999};
    const GeodesicRay r1(DiskPoint(x1, y1), BoundaryPoint(to_radians(cfg, end1)));
    const GeodesicRay r2(DiskPoint(x2, y2), BoundaryPoint(to_radians(cfg, end2)));
    const bool asymptotic = are_asymptotic(r1, r2);
    const std::string verdict =
        asymptotic ? "bounded (asymptotic)" : "divergent";

    std::vector<HausdorffEstimate> estimates;
    for (double c : cutoffs)
        estimates.push_back(hausdorff_distance_rays(r1, r2, grid,
                                                    cfg.tolerance, c));

    if (cfg.format == "csv") {
        std::cout << "cutoff,estimate,resolution\n";
        for (std::size_t i = 0; i < cutoffs.size(); ++i)
            std::cout << num(cutoffs[i]) << "," << num(estimates[i].value)
                      << "," << num(estimates[i].resolution) << "\n";
        std::cout << "# verdict: " << verdict << "\n";
        return kExitOk;
    }
    if (cfg.format == "plain") {
        for (std::size_t i = 0; i < cutoffs.size(); ++i)
            std::cout << num(cutoffs[i]) << " " << num(estimates[i].value)
                      << "\n";
        std::cout << "verdict " << verdict << "\n";
        return kExitOk;
    }

    std::vector<std::string> rows;
    for (std::size_t i = 0; i < cutoffs.size(); ++i) {
        JsonObject row;
        row.add_num("cutoff", cutoffs[i]);
        row.add_num("estimate", estimates[i].value);
        row.add_num("resolution", estimates[i].resolution);
        rows.push_back(row.str());
    }
    JsonObject results;
    results.add_bool("asymptotic", asymptotic);
    results.add_str("verdict", verdict);
    results.add("rows", json_array(rows));
    JsonObject diag;
    diag.add_int("grid", static_cast<long long>(grid));
    emit_record(cfg, "hausdorff", results, diag);
    return kExitOk;
}

// ----------------------------------------------------------------- grid ----

int cmd_grid(const RunConfig& cfg, std::size_t resolution, double cx,
             double cy) {
    if (resolution < 2) throw DomainError("resolution must be at least 2");
    const DiskPoint center(cx, cy);
    const Generator gen = make_generator(cfg);
    const bool use_closed = cfg.method != "quadrature";
    if (use_closed && cfg.generator != "standard")
        throw DomainError(
            "closed-form evaluation requires the standard generator");

    const auto coord = [&](std::size_t i) {
        return -1.0 + 2.0 * static_cast<double>(i) /
                          static_cast<double>(resolution - 1);
    };
    // Header row: the x lattice.
    std::cout << "y\\x";
    for (std::size_t i = 0; i < resolution; ++i)
        std::cout << "," << num(coord(i));
    std::cout << "\n";
    for (std::size_t j = 0; j < resolution; ++j) {
        const double y = coord(j);
        std::cout << num(y);
        for (std::size_t i = 0; i < resolution; ++i) {
            const double x = coord(i);
            std::cout << ",";
            if (x * x + y * y >= (1.0 - 1e-12) * (1.0 - 1e-12)) {
                std::cout << "inf";
                continue;
            }
            const DiskPoint p(x, y);
            const double d =
                use_closed
                    ? distance_closed_form(center, p)
                    : distance_numeric(gen, center, p, cfg.tolerance)
                          .value_or_throw();
            std::cout << num(d);
        }
        std::cout << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Direction-integrated disk metric toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--tol", cfg.tolerance, "Numeric tolerance")
        ->check(CLI::PositiveNumber);
    app.add_option("--method", cfg.method, "Evaluation method")
        ->check(CLI::IsMember({"closed", "quadrature", "both"}));
    app.add_option("--generator", cfg.generator, "Metric generator")
        ->check(CLI::IsMember({"standard", "custom-spec"}));
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "plain"}));
    app.add_option("--seed", cfg.seed, "Seed for sampled commands");
    app.add_flag("--degrees", cfg.degrees, "Interpret angles as degrees");

    double x1 = 0.0, y1 = 0.0, x2 = 0.0, y2 = 0.0;
    auto* dist = app.add_subcommand("dist", "Distance between two points");
    dist->add_option("x1", x1)->required();
    dist->add_option("y1", y1)->required();
    dist->add_option("x2", x2)->required();
    dist->add_option("y2", y2)->required();

    app.add_subcommand("heights",
                       "Ideal-triangle height table and the scaling "
                       "obstruction");

    std::string suite;
    std::size_t samples = 1000;
    std::optional<std::uint64_t> check_seed;
    auto* check = app.add_subcommand("check", "Run a property suite");
    check->add_option("suite", suite)->required();
    check->add_option("samples", samples);
    check->add_option("seed", check_seed);

    std::string mode;
    std::vector<double> angles;
    std::vector<double> epsilons;
    auto* diverge =
        app.add_subcommand("diverge", "Truncated divergence profiles");
    diverge->add_option("mode", mode)->required();
    diverge->add_option("angles", angles)->expected(1, 2);
    diverge->add_option("--eps", epsilons, "Strictly decreasing epsilon list");

    double hx1 = 0.0, hy1 = 0.0, hend1 = 0.0;
    double hx2 = 0.0, hy2 = 0.0, hend2 = 0.0;
    std::vector<double> cutoffs;
    std::size_t hgrid = 64;
    auto* hausdorff =
        app.add_subcommand("hausdorff", "Hausdorff distance between ray "
                                        "images across cutoffs");
    hausdorff->add_option("x1", hx1)->required();
    hausdorff->add_option("y1", hy1)->required();
    hausdorff->add_option("end1", hend1)->required();
    hausdorff->add_option("x2", hx2)->required();
    hausdorff->add_option("y2", hy2)->required();
    hausdorff->add_option("end2", hend2)->required();
    hausdorff->add_option("--cutoffs", cutoffs, "Euclidean cutoff radii");
    hausdorff->add_option("--grid", hgrid, "Sample grid size");

    std::size_t resolution = 0;
    double cx = 0.0, cy = 0.0;
    auto* grid =
        app.add_subcommand("grid", "Distance field on a Cartesian lattice");
    grid->add_option("resolution", resolution)->required();
    grid->add_option("cx", cx);
    grid->add_option("cy", cy);

    // Let global flags (--tol, --method, ...) appear after the subcommand.
    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalidInput;
    }

    try {
        if (*dist) return cmd_dist(cfg, x1, y1, x2, y2);
        if (app.got_subcommand("heights")) return cmd_heights(cfg);
        if (*check) {
            if (check_seed) cfg.seed = *check_seed;
            return cmd_check(cfg, suite, samples);
        }
        if (*diverge) return cmd_diverge(cfg, mode, angles, epsilons);
        if (*hausdorff)
            return cmd_hausdorff(cfg, hx1, hy1, hend1, hx2, hy2, hend2,
                                 cutoffs, hgrid);
        if (*grid) return cmd_grid(cfg, resolution, cx, cy);
    } catch (const NonConvergence& e) {
        std::cerr << "non-convergence: " << e.what() << "\n";
        return kExitNonConvergence;
    } catch (const Error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}
