#include "ghsimplex/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ghsimplex/error.hpp"
#include "ghsimplex/format.hpp"

namespace ghs {

namespace {

std::string entry_name(const std::vector<std::string>& labels, std::size_t i, std::size_t j) {
    return "(" + labels[i] + ", " + labels[j] + ")";
}

}  // namespace

FiniteMetricSpace validate(RawMatrix raw, const ValidationOptions& options) {
    const std::size_t n = raw.rows.size();
    if (n == 0) throw Error(ErrorCode::ZeroPoints, "distance matrix has no rows");
    for (std::size_t i = 0; i < n; ++i) {
        if (raw.rows[i].size() != n) {
            throw Error(ErrorCode::NonSquareMatrix, "row " + std::to_string(i) + " has " +
                                                        std::to_string(raw.rows[i].size()) +
                                                        " entries, expected " + std::to_string(n));
        }
    }
    if (raw.labels.empty()) {
        raw.labels.reserve(n);
        for (std::size_t i = 0; i < n; ++i) raw.labels.push_back(std::to_string(i));
    } else if (raw.labels.size() != n) {
        throw Error(ErrorCode::NonSquareMatrix, std::to_string(raw.labels.size()) + " labels for " +
                                                    std::to_string(n) + " points");
    }
    const auto& L = raw.labels;
    const Tolerance& tol = options.tolerance;

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double d = raw.rows[i][j];
            if (!std::isfinite(d)) throw Error(ErrorCode::NonFiniteEntry, "entry " + entry_name(L, i, j) + " is not finite");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (raw.rows[i][i] != 0.0) {
            throw Error(ErrorCode::NonZeroDiagonal,
                        "d" + entry_name(L, i, i) + " = " + format_number(raw.rows[i][i]));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const double d = raw.rows[i][j];
            if (d < 0) throw Error(ErrorCode::NegativeDistance, "d" + entry_name(L, i, j) + " = " + format_number(d));
            if (d == 0) throw Error(ErrorCode::ZeroOffDiagonal, "d" + entry_name(L, i, j) + " = 0 for distinct points");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!tol.eq(raw.rows[i][j], raw.rows[j][i])) {
                throw Error(ErrorCode::AsymmetricMatrix, "d" + entry_name(L, i, j) + " = " +
                                                             format_number(raw.rows[i][j]) + " but d" +
                                                             entry_name(L, j, i) + " = " +
                                                             format_number(raw.rows[j][i]));
            }
        }
    }

    FiniteMetricSpace x;
    x.n_ = n;
    x.dist_.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            x.dist_[i * n + j] = raw.rows[i][j];
            x.dist_[j * n + i] = raw.rows[i][j];
        }
    }

    if (options.check_triangle) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = i + 1; k < n; ++k) {
                const double direct = x(i, k);
                for (std::size_t j = 0; j < n; ++j) {
                    if (j == i || j == k) continue;
                    const double detour = x(i, j) + x(j, k);
                    if (tol.gt(direct, detour)) {
                        throw Error(ErrorCode::TriangleViolation,
                                    "triple (" + L[i] + ", " + L[j] + ", " + L[k] + "): d(" + L[i] + ", " +
                                        L[k] + ") = " + format_number(direct) + " > d(" + L[i] + ", " + L[j] +
                                        ") + d(" + L[j] + ", " + L[k] + ") = " + format_number(detour));
                    }
                }
            }
        }
    }

    x.labels_ = std::move(raw.labels);
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            lo = std::min(lo, x(i, j));
            hi = std::max(hi, x(i, j));
        }
    }
    x.diam_ = hi;
    x.eps_ = n >= 2 ? lo : 0.0;
    return x;
}

FiniteMetricSpace validate(const std::vector<std::vector<double>>& matrix, const ValidationOptions& options) {
    return validate(RawMatrix{{}, matrix}, options);
}

bool FiniteMetricSpace::is_integral() const {
    return std::all_of(dist_.begin(), dist_.end(), [](double d) { return d == std::floor(d); });
}

std::vector<std::vector<double>> FiniteMetricSpace::matrix() const {
    std::vector<std::vector<double>> out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i].assign(row(i).begin(), row(i).end());
    return out;
}

FiniteMetricSpace scale(const FiniteMetricSpace& x, double c) {
    if (!(c > 0) || !std::isfinite(c)) throw Error(ErrorCode::NonPositiveScale, "scale factor " + format_number(c));
    RawMatrix raw{x.labels(), x.matrix()};
    for (auto& r : raw.rows)
        for (auto& d : r) d *= c;
    // Scaling preserves the axioms up to rounding; the triangle check would
    // only reject rounding noise here.
    return validate(std::move(raw), ValidationOptions{.check_triangle = false});
}

FiniteMetricSpace simplex(std::size_t n, double lambda) {
    if (n == 0) throw Error(ErrorCode::ZeroPoints, "simplex needs at least one point");
    if (!(lambda > 0) || !std::isfinite(lambda))
        throw Error(ErrorCode::NonPositiveScale, "simplex edge length " + format_number(lambda));
    std::vector<std::vector<double>> m(n, std::vector<double>(n, lambda));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 0.0;
    return validate(m, ValidationOptions{.check_triangle = false});
}

PointSet::PointSet(std::vector<std::size_t> indices, const FiniteMetricSpace& x) : indices_(std::move(indices)) {
    if (indices_.empty()) throw Error(ErrorCode::EmptySet, "point set is empty");
    for (std::size_t i : indices_) {
        if (i >= x.size())
            throw Error(ErrorCode::BadParams, "point index " + std::to_string(i) + " out of range");
    }
}

double set_dist_inf(const PointSet& a, const PointSet& b, const FiniteMetricSpace& x) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i : a.indices())
        for (std::size_t j : b.indices()) best = std::min(best, x(i, j));
    return best;
}

double set_dist_sup(const PointSet& a, const PointSet& b, const FiniteMetricSpace& x) {
    double best = 0.0;
    for (std::size_t i : a.indices())
        for (std::size_t j : b.indices()) best = std::max(best, x(i, j));
    return best;
}

double hausdorff(const PointSet& a, const PointSet& b, const FiniteMetricSpace& x) {
    auto directed = [&x](const PointSet& from, const PointSet& to) {
        double worst = 0.0;
        for (std::size_t i : from.indices()) {
            double nearest = std::numeric_limits<double>::infinity();
            for (std::size_t j : to.indices()) nearest = std::min(nearest, x(i, j));
            worst = std::max(worst, nearest);
        }
        return worst;
    };
    return std::max(directed(a, b), directed(b, a));
}

}  // namespace ghs
