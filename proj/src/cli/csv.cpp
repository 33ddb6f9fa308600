#include "wigent/cli/csv.hpp"

#include "wigent/format.hpp"

namespace wigent::cli {

std::string csv_provenance(std::uint64_t seed, double tol) {
    return "# seed=" + std::to_string(seed) + ", tol=" + format_number(tol, 6) + ", version=" + kVersion;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out << ',';
        out << cells[i];
    }
    out << '\n';
}

}  // namespace wigent::cli
