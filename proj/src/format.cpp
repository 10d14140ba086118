#include "ghsimplex/format.hpp"

#include <charconv>
#include <cstdio>

#include "ghsimplex/spacing.hpp"

namespace ghs {

std::string format_number(double value) {
    if (value == 0.0) value = 0.0;  // drop the sign of -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

std::string format_exact(double value) {
    if (value == 0.0) value = 0.0;
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, end);
}

std::string Spacing::to_string() const { return unbounded_ ? "inf" : format_number(value_); }

}  // namespace ghs
