#include "ghsimplex/simplex_distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "ghsimplex/error.hpp"
#include "ghsimplex/format.hpp"

namespace ghs {

std::string_view to_string(Branch b) {
    switch (b) {
        case Branch::SinglePoint: return "single-point";
        case Branch::BiggerSimplex: return "bigger-simplex";
        case Branch::EqualCardinality: return "equal-cardinality";
        case Branch::PartitionSearch: return "partition-enum";
    }
    return "unknown";
}

namespace {

constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();

void check_lambda(double lambda) {
    if (!(lambda > 0) || !std::isfinite(lambda))
        throw Error(ErrorCode::NonPositiveLambda, "lambda = " + format_number(lambda));
}

/// Node budget for a search over D_m(X): unlimited when S(n, m) is under the
/// cap, otherwise the cap itself, so that pruning gets a chance to finish.
std::uint64_t node_budget(std::size_t n, std::size_t m, std::uint64_t cap) {
    try {
        return partition_count(n, m) <= cap ? kUnlimited : cap;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Overflow) return cap;
        throw;
    }
}

void throw_if_exhausted(const SearchStats& stats, std::size_t n, std::size_t m, std::uint64_t cap) {
    if (stats.budget_exhausted) {
        throw Error(ErrorCode::EnumerationTooLarge, "search over partitions of " + std::to_string(n) + " points into " +
                                                        std::to_string(m) + " blocks did not finish within " +
                                                        std::to_string(cap) + " nodes");
    }
}

}  // namespace

SimplexDistance solve_gh_to_simplex(const FiniteMetricSpace& x, std::size_t m, double lambda, std::uint64_t cap) {
    check_lambda(lambda);
    if (m == 0) throw Error(ErrorCode::BadCardinality, "simplex must have at least one point");
    const std::size_t n = x.size();
    const double diam = x.diam();

    SimplexDistance out;
    if (m > n) {
        out.branch = Branch::BiggerSimplex;
        out.twice_gh = std::max(lambda, diam - lambda);
        return out;
    }
    if (m == 1) {
        out.branch = Branch::SinglePoint;
        out.twice_gh = diam;
        return out;
    }
    if (m == n) {
        out.branch = Branch::EqualCardinality;
        out.twice_gh = std::max(lambda - x.eps(), diam - lambda);
        return out;
    }

    // min over D of max{diam D, lambda - alpha(D), diam X - lambda}; the last
    // term does not depend on D and is a floor for every candidate.
    const double floor = diam - lambda;
    double best = std::numeric_limits<double>::infinity();
    std::vector<int> best_labels;
    auto objective = [&](const PartialPartition& p) {
        return p.min_separation.max_with_difference(std::max(p.max_block_diam, floor), lambda);
    };
    auto on_node = [&](const PartialPartition& p) {
        return objective(p) >= best ? SearchAction::Prune : SearchAction::Continue;
    };
    auto on_leaf = [&](const PartialPartition& p) {
        const double v = objective(p);
        if (v < best) {
            best = v;
            best_labels.assign(p.labels.begin(), p.labels.end());
        }
        return best <= floor ? SearchAction::Stop : SearchAction::Continue;
    };
    out.stats = search_partitions(x, m, on_node, on_leaf, node_budget(n, m, cap));
    throw_if_exhausted(out.stats, n, m, cap);
    out.branch = Branch::PartitionSearch;
    out.twice_gh = best;
    out.argmin = Partition::from_rgs(std::move(best_labels));
    return out;
}

double gh_to_simplex(const FiniteMetricSpace& x, std::size_t m, double lambda, std::uint64_t cap) {
    return solve_gh_to_simplex(x, m, lambda, cap).twice_gh;
}

// ---------------------------------------------------------------------------

void Characteristics::validate(const Tolerance& tol) const {
    auto fail = [](const std::string& why) { throw Error(ErrorCode::InvalidCharacteristics, why); };
    auto check_value = [&](double v, const char* name) {
        if (!std::isfinite(v) || v < 0) fail(std::string(name) + " must be a finite nonnegative number");
    };
    if (m < 1) fail("m must be at least 1");
    check_value(diam, "diam");
    check_value(eps, "eps");
    check_value(d_minus, "d_minus");
    check_value(d_plus, "d_plus");
    if (alpha_minus.is_unbounded() != alpha_plus.is_unbounded()) fail("alpha_minus and alpha_plus must both be finite or both inf");
    if (alpha_minus.is_finite()) {
        check_value(alpha_minus.value(), "alpha_minus");
        check_value(alpha_plus.value(), "alpha_plus");
        if (!tol.le(alpha_minus.value(), alpha_plus.value())) fail("alpha_minus > alpha_plus");
        if (!tol.le(alpha_plus.value(), diam)) fail("alpha_plus > diam");
    }
    if ((m == 1) != alpha_minus.is_unbounded()) fail("alpha is inf exactly when m = 1");
    if (m == 1 && !(tol.eq(d_minus, diam) && tol.eq(d_plus, diam))) fail("m = 1 requires d_minus = d_plus = diam");
    if (!tol.le(d_minus, d_plus)) fail("d_minus > d_plus");
    if (!tol.le(d_plus, diam)) fail("d_plus > diam");
    if (!tol.le(eps, diam)) fail("eps > diam");
}

Characteristics characteristics(const FiniteMetricSpace& x, std::size_t m, std::uint64_t cap) {
    const std::size_t n = x.size();
    detail::check_cardinality(n, m);
    Characteristics c;
    c.m = m;
    c.diam = x.diam();
    c.eps = x.eps();
    const std::uint64_t budget = node_budget(n, m, cap);
    auto keep_going = [](const PartialPartition&) { return SearchAction::Continue; };

    // alpha-: nothing is below eps, so stop once it is reached.
    {
        Spacing best = Spacing::unbounded();
        bool any = false;
        auto leaf = [&](const PartialPartition& p) {
            if (!any || p.min_separation < best) best = p.min_separation;
            any = true;
            return (best.is_finite() && best.value() <= c.eps) ? SearchAction::Stop : SearchAction::Continue;
        };
        throw_if_exhausted(search_partitions(x, m, keep_going, leaf, budget), n, m, cap);
        c.alpha_minus = best;
    }
    // alpha+: the partial minimum separation only shrinks along a branch.
    {
        Spacing best(0.0);
        bool any = false;
        auto node = [&](const PartialPartition& p) {
            return any && p.min_separation <= best ? SearchAction::Prune : SearchAction::Continue;
        };
        auto leaf = [&](const PartialPartition& p) {
            if (!any || p.min_separation > best) best = p.min_separation;
            any = true;
            return best.is_unbounded() ? SearchAction::Stop : SearchAction::Continue;
        };
        throw_if_exhausted(search_partitions(x, m, node, leaf, budget), n, m, cap);
        c.alpha_plus = best;
    }
    // d_m: the partial block diameter only grows along a branch.
    {
        double best = std::numeric_limits<double>::infinity();
        auto node = [&](const PartialPartition& p) {
            return p.max_block_diam >= best ? SearchAction::Prune : SearchAction::Continue;
        };
        auto leaf = [&](const PartialPartition& p) {
            best = std::min(best, p.max_block_diam);
            return best == 0.0 ? SearchAction::Stop : SearchAction::Continue;
        };
        throw_if_exhausted(search_partitions(x, m, node, leaf, budget), n, m, cap);
        c.d_minus = best;
    }
    // d_m+: nothing exceeds diam X.
    {
        double best = 0.0;
        auto leaf = [&](const PartialPartition& p) {
            best = std::max(best, p.max_block_diam);
            return best >= c.diam ? SearchAction::Stop : SearchAction::Continue;
        };
        throw_if_exhausted(search_partitions(x, m, keep_going, leaf, budget), n, m, cap);
        c.d_plus = best;
    }
    return c;
}

std::vector<MstEdge> mst(const FiniteMetricSpace& x) {
    const std::size_t n = x.size();
    std::vector<MstEdge> edges;
    edges.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j, x(i, j)});
    std::sort(edges.begin(), edges.end(), [](const MstEdge& a, const MstEdge& b) {
        if (a.weight != b.weight) return a.weight < b.weight;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });

    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&parent](std::size_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };

    std::vector<MstEdge> tree;
    tree.reserve(n ? n - 1 : 0);
    for (const auto& e : edges) {
        const auto a = find(e.i);
        const auto b = find(e.j);
        if (a == b) continue;
        parent[std::max(a, b)] = std::min(a, b);
        tree.push_back(e);
        if (tree.size() + 1 == n) break;
    }
    return tree;
}

Spacing alpha_plus_via_mst(const FiniteMetricSpace& x, std::size_t m) {
    detail::check_cardinality(x.size(), m);
    if (m == 1) return Spacing::unbounded();
    std::vector<double> w;
    for (const auto& e : mst(x)) w.push_back(e.weight);
    std::sort(w.begin(), w.end(), std::greater<>());
    return Spacing(w[m - 2]);
}

}  // namespace ghs
