#include "ghsimplex/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "ghsimplex/error.hpp"

namespace ghs {

namespace {

// (0, 1], built from the top 53 bits so it is reproducible across standard libraries.
double unit_open_closed(std::mt19937_64& rng) {
    return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

}  // namespace

FiniteMetricSpace random_metric(std::size_t n, std::uint64_t seed, const RandomMetricOptions& options) {
    if (n == 0) throw Error(ErrorCode::BadParams, "random-metric needs n >= 1");
    if (!(options.max_weight >= 1) || !std::isfinite(options.max_weight))
        throw Error(ErrorCode::BadParams, "max weight must be at least 1");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    const auto top = static_cast<std::uint64_t>(std::floor(options.max_weight));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double w = options.integral ? static_cast<double>(1 + rng() % top)
                                              : unit_open_closed(rng) * options.max_weight;
            d[i][j] = d[j][i] = w;
        }
    }
    // Shortest-path completion.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return validate(d);
}

FiniteMetricSpace lp_points(std::size_t n, std::size_t dim, double p, std::uint64_t seed) {
    if (n == 0 || dim == 0) throw Error(ErrorCode::BadParams, "lp-points needs n >= 1 and dim >= 1");
    if (!(p >= 1)) throw Error(ErrorCode::BadParams, "lp-points needs p >= 1");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<double>> pts(n, std::vector<double>(dim));
    for (auto& pt : pts)
        for (auto& c : pt) c = unit_open_closed(rng);

    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < dim; ++k) {
                const double diff = std::fabs(pts[i][k] - pts[j][k]);
                acc = std::isinf(p) ? std::max(acc, diff) : acc + std::pow(diff, p);
            }
            d[i][j] = d[j][i] = std::isinf(p) ? acc : std::pow(acc, 1.0 / p);
            if (d[i][j] == 0.0) throw Error(ErrorCode::BadParams, "coincident sample points; try another seed");
        }
    }
    return validate(d);
}

FiniteMetricSpace circle_sample(std::size_t n, bool geodesic) {
    if (n == 0) throw Error(ErrorCode::BadParams, "circle-sample needs n >= 1");
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::size_t k = std::min(j - i, n - (j - i));
            const double angle = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
            d[i][j] = d[j][i] = geodesic ? angle : 2 * std::sin(angle / 2);
        }
    }
    return validate(d);
}

}  // namespace ghs
