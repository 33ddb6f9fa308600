#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace wigent::cli {

inline constexpr const char* kVersion = "1.0.0";

/// "# seed=<seed>, tol=<tol>, version=<version>"
std::string csv_provenance(std::uint64_t seed, double tol);

/// Writes rows of pre-formatted cells joined by commas.
void write_csv_row(std::ostream& out, const std::vector<std::string>& cells);

}  // namespace wigent::cli
