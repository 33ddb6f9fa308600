#pragma once

#include <charconv>
#include <cmath>
#include <string>

namespace wigent {

/// Locale-independent decimal rendering with a fixed number of significant digits.
inline std::string format_number(double v, int significant = 15) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, significant);
    return std::string(buf, res.ptr);
}

}  // namespace wigent
