#pragma once

#include <algorithm>
#include <cmath>

namespace ghs {

/// Absolute-plus-relative comparison slack. Integer-valued inputs are at least
/// 1 apart, so they still compare exactly under the default.
struct Tolerance {
    double abs = 1e-9;
    double rel = 1e-9;

    double slack(double a, double b) const { return abs + rel * std::max(std::fabs(a), std::fabs(b)); }

    bool eq(double a, double b) const { return std::fabs(a - b) <= slack(a, b); }
    bool le(double a, double b) const { return a <= b + slack(a, b); }
    bool lt(double a, double b) const { return a < b - slack(a, b); }
    bool ge(double a, double b) const { return le(b, a); }
    bool gt(double a, double b) const { return lt(b, a); }
};

}  // namespace ghs
