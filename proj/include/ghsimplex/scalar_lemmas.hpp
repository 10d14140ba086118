#pragma once

#include <algorithm>
#include <cmath>
#include <span>

#include "ghsimplex/error.hpp"

// Elementary max/abs identities that the distance formulas lean on. Each
// closed form has a direct-evaluation twin so the identities can be checked
// numerically.
namespace ghs::lemmas {

/// max{a, |b - a|}, bounded above by max{a, b} for a, b >= 0.
inline double max_abs_lhs(double a, double b) { return std::max(a, std::fabs(b - a)); }
inline double max_abs_bound(double a, double b) { return std::max(a, b); }

namespace detail {
inline void require_non_empty(std::span<const double> set) {
    if (set.empty()) throw Error(ErrorCode::EmptySet, "lemma evaluated on an empty set");
}
}  // namespace detail

/// sup over a in A of |lambda - a|, evaluated directly.
inline double sup_abs_direct(std::span<const double> set, double lambda) {
    detail::require_non_empty(set);
    double out = 0.0;
    for (double a : set) out = std::max(out, std::fabs(lambda - a));
    return out;
}

/// max{lambda - inf A, sup A - lambda}.
inline double sup_abs_over_set(std::span<const double> set, double lambda) {
    detail::require_non_empty(set);
    const auto [lo, hi] = std::minmax_element(set.begin(), set.end());
    return std::max(lambda - *lo, *hi - lambda);
}

/// |lambda - (inf A + sup A)/2| + (sup A - inf A)/2; equal to the above up to rounding.
inline double sup_abs_midpoint_form(std::span<const double> set, double lambda) {
    detail::require_non_empty(set);
    const auto [lo, hi] = std::minmax_element(set.begin(), set.end());
    return std::fabs(lambda - (*lo + *hi) / 2) + (*hi - *lo) / 2;
}

/// sup over a in A of max{lambda, |lambda - a|}, evaluated directly.
inline double sup_max_direct(std::span<const double> set, double lambda) {
    detail::require_non_empty(set);
    double out = lambda;
    for (double a : set) out = std::max({out, lambda, std::fabs(lambda - a)});
    return out;
}

/// max{lambda, sup A - lambda}; valid when inf A >= 0.
inline double sup_max_over_set(std::span<const double> set, double lambda) {
    detail::require_non_empty(set);
    return std::max(lambda, *std::max_element(set.begin(), set.end()) - lambda);
}

/// max{lambda, |a - lambda|} and its closed form max{lambda, a - lambda}, a >= 0.
inline double max_lambda_abs(double a, double lambda) { return std::max(lambda, std::fabs(a - lambda)); }
inline double max_lambda_diff(double a, double lambda) { return std::max(lambda, a - lambda); }

}  // namespace ghs::lemmas
