#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace dmetric::suites {

struct PropertyResult {
    std::string name;
    bool passed;
    double worst;  // worst-case violation (or slack) observed
};

struct SuiteReport {
    std::string suite;
    bool passed;
    std::vector<PropertyResult> properties;
};

/// Names accepted by run_suite: metric-axioms, additivity, isometries,
/// oracle, origin-bound, hilbert.
std::vector<std::string> suite_names();

/// Deterministic per seed: the same invocation produces identical results.
SuiteReport run_suite(const std::string& name, std::size_t samples,
                      std::uint64_t seed);

}  // namespace dmetric::suites
