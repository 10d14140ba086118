#pragma once

#include <string>

namespace ghs {

/// Decimal rendering used by every report: 12 significant digits, shortest
/// form ("%.12g"), and "-0" folded to "0".
std::string format_number(double value);

/// Round-trip rendering (17 significant digits) for files we write back out.
std::string format_exact(double value);

}  // namespace ghs
