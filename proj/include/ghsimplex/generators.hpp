#pragma once

#include <cstddef>
#include <cstdint>

#include "ghsimplex/metric_space.hpp"

namespace ghs {

struct RandomMetricOptions {
    double max_weight = 10.0;
    bool integral = true;  // integer edge weights in [1, max_weight]
};

/// Random complete graph weights from a seeded mt19937_64, closed under
/// shortest paths so the triangle inequality holds. Identical for identical
/// (n, seed, options) on every platform.
FiniteMetricSpace random_metric(std::size_t n, std::uint64_t seed, const RandomMetricOptions& options = {});

/// n seeded uniform points in [0, 1]^dim under the l_p norm (p >= 1, or inf).
FiniteMetricSpace lp_points(std::size_t n, std::size_t dim, double p, std::uint64_t seed);

/// n equispaced points on the unit circle, with chord lengths 2 sin(k pi / n)
/// or arc lengths 2 pi k / n (k = index distance around the circle).
FiniteMetricSpace circle_sample(std::size_t n, bool geodesic);

}  // namespace ghs
