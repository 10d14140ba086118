#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ghsimplex/metric_space.hpp"
#include "ghsimplex/partition.hpp"
#include "ghsimplex/spacing.hpp"
#include "ghsimplex/tolerance.hpp"

namespace ghs {

// ---------------------------------------------------------------------------
// Exact distance to a simplex
//
// Every value below is g(lambda) = 2 d_GH(lambda Delta_m, X), twice the
// Gromov-Hausdorff distance from the m-point simplex with edge lambda to X.

enum class Branch {
    SinglePoint,       // m = 1: the simplex is a point, g = diam X
    BiggerSimplex,     // m > #X: g = max{lambda, diam X - lambda}
    EqualCardinality,  // m = #X: g = max{lambda - eps X, diam X - lambda}
    PartitionSearch,   // otherwise: min over D in D_m(X) of max{diam D, lambda - alpha(D), diam X - lambda}
};

std::string_view to_string(Branch b);

struct SimplexDistance {
    double twice_gh = 0.0;
    Branch branch = Branch::PartitionSearch;
    std::optional<Partition> argmin;  // first minimiser in RGS order, when the search ran
    SearchStats stats;

    double gh() const { return twice_gh / 2; }
};

SimplexDistance solve_gh_to_simplex(const FiniteMetricSpace& x, std::size_t m, double lambda,
                                    std::uint64_t cap = kDefaultEnumerationCap);

/// 2 d_GH(lambda Delta_m, X).
double gh_to_simplex(const FiniteMetricSpace& x, std::size_t m, double lambda,
                     std::uint64_t cap = kDefaultEnumerationCap);

// ---------------------------------------------------------------------------
// Partition characteristics

struct Characteristics {
    std::size_t m = 1;
    double diam = 0.0;
    double eps = 0.0;
    Spacing alpha_minus;  // inf of alpha(D) over D_m(X)
    Spacing alpha_plus;   // sup of alpha(D) over D_m(X)
    double d_minus = 0.0;  // inf of diam D over D_m(X)
    double d_plus = 0.0;   // sup of diam D over D_m(X)

    /// Throws InvalidCharacteristics on any broken invariant.
    void validate(const Tolerance& tol = {}) const;

    friend bool operator==(const Characteristics&, const Characteristics&) = default;
};

/// Exact characteristics of a finite space by pruned enumeration of D_m(X).
Characteristics characteristics(const FiniteMetricSpace& x, std::size_t m,
                                std::uint64_t cap = kDefaultEnumerationCap);

struct MstEdge {
    std::size_t i = 0;
    std::size_t j = 0;
    double weight = 0.0;

    friend bool operator==(const MstEdge&, const MstEdge&) = default;
};

/// Kruskal with edges ordered by (weight, i, j), i < j.
std::vector<MstEdge> mst(const FiniteMetricSpace& x);

/// The (m-1)-th largest MST edge, which is the largest achievable gap
/// between blocks of an m-block partition (single-linkage cut). Unbounded for m = 1.
Spacing alpha_plus_via_mst(const FiniteMetricSpace& x, std::size_t m);

// ---------------------------------------------------------------------------
// Closed-form curves and bounds from characteristics alone

enum class CaseTag { BiggerSimplex, EqualCardinality, AlphaZero, DmEqualsDiam, Case1, Case2, Case3_1, Case3_2 };
enum class Region { Left, Middle, Right };

std::string_view to_string(CaseTag c);
std::string_view to_string(Region r);

/// Either the exact value of g(lambda) or a certified interval containing it.
class GhBound {
public:
    static GhBound exact(double value, CaseTag c, Region r) { return GhBound(value, value, true, c, r); }
    static GhBound interval(double lo, double hi, CaseTag c, Region r);

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    bool is_exact() const { return exact_; }
    CaseTag case_tag() const { return case_; }
    Region region() const { return region_; }
    bool contains(double value, const Tolerance& tol) const { return tol.le(lo_, value) && tol.le(value, hi_); }

private:
    GhBound(double lo, double hi, bool exact, CaseTag c, Region r)
        : lo_(lo), hi_(hi), exact_(exact), case_(c), region_(r) {}

    double lo_;
    double hi_;
    bool exact_;
    CaseTag case_;
    Region region_;
};

/// Locates the point A = ((diam + alpha-)/2, (diam - alpha-)/2) and
/// B = ((diam + alpha+)/2, (diam - alpha+)/2) against the strip
/// d_minus <= y <= d_plus. Precedence: DmEqualsDiam, then the general cases
/// in order 1, 2, 3.1, 3.2, with AlphaZero replacing 1, 2 and 3.1 when alpha+ = 0.
CaseTag classify_case(const Characteristics& c, const Tolerance& tol = {});

/// The formulas of one specific case evaluated at lambda, regardless of
/// whether `c` satisfies that case's hypothesis. Used to compare adjacent
/// cases on their shared boundary.
GhBound bounds_for_case(const Characteristics& c, CaseTag tag, double lambda, const Tolerance& tol = {});

GhBound bounds_from_characteristics(const Characteristics& c, double lambda, const Tolerance& tol = {});

/// Closed forms for m > #X and m = #X, tagged with their region.
GhBound bigger_simplex_bound(double diam, double lambda, const Tolerance& tol = {});
GhBound equal_cardinality_bound(double diam, double eps, double lambda, const Tolerance& tol = {});

struct SweepRow {
    double lambda = 0.0;
    GhBound bound = GhBound::exact(0.0, CaseTag::Case1, Region::Left);
    std::optional<double> value;  // exact g(lambda), finite-space sweeps only
};

struct SweepOptions {
    Tolerance tolerance{};
    std::uint64_t cap = kDefaultEnumerationCap;
    unsigned threads = 1;
};

/// Throws BadGrid unless the grid is non-empty, positive, finite, strictly increasing.
void check_grid(const std::vector<double>& grid);
std::vector<double> make_grid(double min, double max, double step);

std::vector<SweepRow> sweep(const Characteristics& c, const std::vector<double>& grid, const SweepOptions& opts = {});
std::vector<SweepRow> sweep(const FiniteMetricSpace& x, std::size_t m, const std::vector<double>& grid,
                            const SweepOptions& opts = {});

// ---------------------------------------------------------------------------
// Characteristics files and presets

/// {"m", "diam", "alpha_minus", "alpha_plus", "d_minus", "d_plus"} plus an
/// optional "eps" (default 0). Alphas may be the string "inf" when m = 1.
Characteristics characteristics_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const Characteristics& c);

/// "circle-m2": the unit circle with m = 2 (diam 2, alpha = 0, d = 2).
/// "simplex-<n>-<lambda>": the exact characteristics of simplex(n, lambda) at
/// block count m (m defaults to 2 for circle-m2 and is required otherwise).
Characteristics preset_characteristics(std::string_view name, std::optional<std::size_t> m);

}  // namespace ghs
