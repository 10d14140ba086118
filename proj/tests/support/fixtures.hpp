#pragma once

// Shared fixtures and test-only oracles. Nothing here calls into the code paths
// it is used to check: partitions are enumerated by brute-force labelling,
// correspondences by subset enumeration, and characteristics by scanning the
// brute-force partition list.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <vector>

#include "ghsimplex/correspondence.hpp"
#include "ghsimplex/generators.hpp"
#include "ghsimplex/metric_space.hpp"
#include "ghsimplex/simplex_distance.hpp"

namespace ghs::testing {

/// E1: |ab| = 1, |ac| = 2, |bc| = 2.
inline FiniteMetricSpace e1() {
    return validate(RawMatrix{{"a", "b", "c"}, {{0, 1, 2}, {1, 0, 2}, {2, 2, 0}}});
}

inline FiniteMetricSpace point() { return simplex(1, 1.0); }

/// Every labelling of n points with values < m that uses all m values,
/// canonicalised as a restricted growth string; the set is D_m by definition.
inline std::set<std::vector<int>> brute_force_partitions(std::size_t n, std::size_t m) {
    std::set<std::vector<int>> out;
    std::vector<int> label(n, 0);
    while (true) {
        std::vector<int> seen(m, -1);
        std::vector<int> rgs(n);
        int next = 0;
        for (std::size_t i = 0; i < n; ++i) {
            auto& s = seen[static_cast<std::size_t>(label[i])];
            if (s == -1) s = next++;
            rgs[i] = s;
        }
        if (static_cast<std::size_t>(next) == m) out.insert(rgs);
        std::size_t pos = 0;
        while (pos < n && ++label[pos] == static_cast<int>(m)) label[pos++] = 0;
        if (pos == n) break;
    }
    return out;
}

struct BruteCharacteristics {
    double alpha_minus = std::numeric_limits<double>::infinity();
    double alpha_plus = -1;
    double d_minus = std::numeric_limits<double>::infinity();
    double d_plus = -1;
};

/// Characteristics from the brute-force partition list, by direct pair scans.
inline BruteCharacteristics brute_characteristics(const FiniteMetricSpace& x, std::size_t m) {
    BruteCharacteristics c;
    const std::size_t n = x.size();
    for (const auto& rgs : brute_force_partitions(n, m)) {
        double a = std::numeric_limits<double>::infinity();
        double d = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                if (rgs[i] == rgs[j]) d = std::max(d, x(i, j));
                else a = std::min(a, x(i, j));
            }
        c.alpha_minus = std::min(c.alpha_minus, a);
        c.alpha_plus = std::max(c.alpha_plus, a);
        c.d_minus = std::min(c.d_minus, d);
        c.d_plus = std::max(c.d_plus, d);
    }
    return c;
}

/// min over D in D_m(X) of max{diam D, lambda - alpha(D), diam X - lambda},
/// by scanning the brute-force partition list.
inline double brute_partition_infimum(const FiniteMetricSpace& x, std::size_t m, double lambda) {
    double best = std::numeric_limits<double>::infinity();
    const std::size_t n = x.size();
    for (const auto& rgs : brute_force_partitions(n, m)) {
        double a = std::numeric_limits<double>::infinity();
        double d = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                if (rgs[i] == rgs[j]) d = std::max(d, x(i, j));
                else a = std::min(a, x(i, j));
            }
        best = std::min(best, std::max({d, lambda - a, x.diam() - lambda}));
    }
    return best;
}

/// Every correspondence between small sets, by subset enumeration of X x Y.
inline std::vector<Relation> all_correspondences(std::size_t nx, std::size_t ny) {
    std::vector<PointPair> cells;
    for (std::size_t a = 0; a < nx; ++a)
        for (std::size_t b = 0; b < ny; ++b) cells.emplace_back(a, b);
    std::vector<Relation> out;
    const std::uint32_t total = 1u << cells.size();
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        std::vector<PointPair> pairs;
        for (std::size_t c = 0; c < cells.size(); ++c)
            if (mask & (1u << c)) pairs.push_back(cells[c]);
        Relation r(pairs);
        if (is_correspondence(r, nx, ny)) out.push_back(std::move(r));
    }
    return out;
}

/// Twice d_GH by minimising over every correspondence (tiny spaces only).
inline double brute_twice_gh(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& r : all_correspondences(x.size(), y.size())) best = std::min(best, distortion(r, x, y));
    return best;
}

/// All symmetric integer matrices on n points with off-diagonal entries in
/// `values` that satisfy the triangle inequality.
inline std::vector<FiniteMetricSpace> integer_metrics(std::size_t n, const std::vector<int>& values) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    std::vector<FiniteMetricSpace> out;
    std::vector<std::size_t> pick(slots.size(), 0);
    while (true) {
        std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
        for (std::size_t s = 0; s < slots.size(); ++s) {
            const auto [i, j] = slots[s];
            d[i][j] = d[j][i] = values[pick[s]];
        }
        bool metric = true;
        for (std::size_t i = 0; i < n && metric; ++i)
            for (std::size_t j = 0; j < n && metric; ++j)
                for (std::size_t k = 0; k < n && metric; ++k) metric = d[i][k] <= d[i][j] + d[j][k];
        if (metric) out.push_back(validate(d));
        std::size_t pos = 0;
        while (pos < pick.size() && ++pick[pos] == values.size()) pick[pos++] = 0;
        if (pos == pick.size()) break;
    }
    return out;
}

/// The fixed integer fixture corpus: the point, every {1,2,3}-metric on 2 and
/// 3 points, every {1,2}-metric on 4 points, and E1.
inline std::vector<FiniteMetricSpace> integer_fixture_set() {
    std::vector<FiniteMetricSpace> out{point(), e1()};
    for (auto& x : integer_metrics(2, {1, 2, 3})) out.push_back(std::move(x));
    for (auto& x : integer_metrics(3, {1, 2, 3})) out.push_back(std::move(x));
    for (auto& x : integer_metrics(4, {1, 2})) out.push_back(std::move(x));
    return out;
}

/// Seeded random spaces: alternating integer and real weights.
inline std::vector<FiniteMetricSpace> random_spaces(std::size_t count, std::size_t n_min, std::size_t n_max,
                                                    std::uint64_t seed0) {
    std::vector<FiniteMetricSpace> out;
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t n = n_min + k % (n_max - n_min + 1);
        RandomMetricOptions opts;
        opts.integral = k % 2 == 0;
        opts.max_weight = opts.integral ? 6.0 : 3.0;
        out.push_back(random_metric(n, seed0 + k, opts));
    }
    return out;
}

/// 8 lambdas evenly spaced on (0, 2 diam]; (0, 2] for a single point.
inline std::vector<double> lambda_grid(const FiniteMetricSpace& x) {
    const double top = x.diam() > 0 ? 2 * x.diam() : 2.0;
    std::vector<double> g;
    for (int k = 1; k <= 8; ++k) g.push_back(top * k / 8);
    return g;
}

}  // namespace ghs::testing
