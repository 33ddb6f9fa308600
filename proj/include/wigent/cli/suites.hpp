#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wigent/quadrature.hpp"

namespace wigent::cli {

struct SuiteResult {
    std::string name;
    bool passed = true;
    /// One human-readable line per check, each prefixed with PASS/FAIL/WARN.
    std::vector<std::string> lines;

    void check(bool ok, const std::string& line);
    void warn(const std::string& line);
};

struct SuiteOptions {
    QuadratureSpec quad;
    std::uint64_t seed = 42;
    unsigned jobs = 1;
};

/// Names accepted by run_suite, excluding "all".
const std::vector<std::string>& suite_names();

bool is_suite_name(const std::string& name);

/// Runs one named invariant suite. Throws InvalidArgument for unknown names.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace wigent::cli
