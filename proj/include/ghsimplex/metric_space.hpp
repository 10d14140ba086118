#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ghsimplex/tolerance.hpp"

namespace ghs {

/// Row-major square matrix as read from a file, before any metric checks.
struct RawMatrix {
    std::vector<std::string> labels;  // may be empty; defaults are "0", "1", ...
    std::vector<std::vector<double>> rows;
};

struct ValidationOptions {
    bool check_triangle = true;
    Tolerance tolerance{};
};

/// A finite metric space: labelled points and a full symmetric distance matrix.
/// Instances only come out of `validate` (or the generators built on it), so
/// every live object satisfies the metric axioms it was checked against.
class FiniteMetricSpace {
public:
    std::size_t size() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return dist_[i * n_ + j]; }
    std::span<const double> row(std::size_t i) const { return {dist_.data() + i * n_, n_}; }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_[i]; }

    double diam() const { return diam_; }
    /// Smallest non-zero distance; 0 for a single point (empty infimum).
    double eps() const { return eps_; }

    bool is_simplex() const { return n_ >= 2 ? eps_ == diam_ : true; }
    /// True when every distance is an integer, so comparisons are exact.
    bool is_integral() const;

    std::vector<std::vector<double>> matrix() const;

    friend FiniteMetricSpace validate(RawMatrix raw, const ValidationOptions& options);
    friend bool operator==(const FiniteMetricSpace&, const FiniteMetricSpace&) = default;

private:
    FiniteMetricSpace() = default;

    std::size_t n_ = 0;
    std::vector<double> dist_;
    std::vector<std::string> labels_;
    double diam_ = 0.0;
    double eps_ = 0.0;
};

/// Checks square shape, finiteness, zero diagonal, symmetry (within tolerance;
/// the upper triangle wins), positivity off the diagonal and, unless disabled,
/// the triangle inequality. Throws `Error` naming the first offending entry.
FiniteMetricSpace validate(RawMatrix raw, const ValidationOptions& options = {});
FiniteMetricSpace validate(const std::vector<std::vector<double>>& matrix,
                           const ValidationOptions& options = {});

inline double diam(const FiniteMetricSpace& x) { return x.diam(); }
inline double eps(const FiniteMetricSpace& x) { return x.eps(); }

FiniteMetricSpace scale(const FiniteMetricSpace& x, double c);
FiniteMetricSpace simplex(std::size_t n, double lambda);

/// Non-empty set of valid point indices into some space.
class PointSet {
public:
    PointSet(std::vector<std::size_t> indices, const FiniteMetricSpace& x);
    std::span<const std::size_t> indices() const { return indices_; }
    std::size_t size() const { return indices_.size(); }

private:
    std::vector<std::size_t> indices_;
};

/// |AB| = min over A x B.
double set_dist_inf(const PointSet& a, const PointSet& b, const FiniteMetricSpace& x);
/// |AB|' = max over A x B.
double set_dist_sup(const PointSet& a, const PointSet& b, const FiniteMetricSpace& x);
double hausdorff(const PointSet& a, const PointSet& b, const FiniteMetricSpace& x);

}  // namespace ghs
