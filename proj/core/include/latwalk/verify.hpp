#pragma once

#include "latwalk/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace latwalk {

/// One verified claim: what was expected, what was computed, and at which
/// tolerance (0 for exact comparisons).
struct Check {
    std::string name;
    std::string expected;
    std::string actual;
    double tol = 0.0;
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;
    bool pass = true;

    void add(Check c);
};

struct SuiteOptions {
    std::size_t vertex_budget = default_vertex_budget;
    /// Tolerance for quadrature-based density checks.
    double tol = 1e-6;
    std::uint64_t seed = 0x5eed2016;
    int random_pairs = 200;
};

/// identity, iso, coincidence, density, path-spectrum, walks, products.
std::vector<std::string> suite_names();

/// Runs a named suite, or every suite for "all".
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

} // namespace latwalk
