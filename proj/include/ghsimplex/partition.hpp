#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "ghsimplex/metric_space.hpp"
#include "ghsimplex/spacing.hpp"

namespace ghs {

/// Default refusal threshold for exhaustive enumerations.
inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// A partition of {0..n-1} into non-empty blocks, stored canonically as a
/// restricted-growth string: point i lives in block rgs[i], and blocks are
/// numbered in order of their smallest member.
class Partition {
public:
    static Partition from_rgs(std::vector<int> rgs);
    /// Any disjoint, covering family of non-empty blocks; reordered canonically.
    static Partition from_blocks(const std::vector<std::vector<std::size_t>>& blocks, std::size_t n);

    std::size_t point_count() const { return rgs_.size(); }
    std::size_t block_count() const { return blocks_.size(); }
    const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
    std::span<const std::size_t> block(std::size_t b) const { return blocks_[b]; }
    int block_of(std::size_t point) const { return rgs_[point]; }
    const std::vector<int>& rgs() const { return rgs_; }

    /// Array of arrays of labels, blocks ordered by smallest member.
    nlohmann::json to_json(const FiniteMetricSpace& x) const;
    /// "{{a,b},{c}}"
    std::string to_string(const FiniteMetricSpace& x) const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    explicit Partition(std::vector<int> rgs);

    std::vector<int> rgs_;
    std::vector<std::vector<std::size_t>> blocks_;
};

/// Walks D_m({0..n-1}) in lexicographic restricted-growth-string order.
class PartitionEnumerator {
public:
    PartitionEnumerator(std::size_t n, std::size_t m);

    bool done() const { return done_; }
    const std::vector<int>& rgs() const { return rgs_; }
    Partition partition() const { return Partition::from_rgs(rgs_); }
    void next();

private:
    std::size_t n_;
    std::size_t m_;
    std::vector<int> rgs_;
    bool done_ = false;
};

/// Calls `visit(rgs)` for each partition in order; stops early when it returns false.
template <class Visit>
bool for_each_partition(std::size_t n, std::size_t m, Visit&& visit) {
    for (PartitionEnumerator e(n, m); !e.done(); e.next()) {
        if (!visit(e.rgs())) return false;
    }
    return true;
}

std::vector<Partition> enumerate_partitions(std::size_t n, std::size_t m);

/// Stirling number of the second kind S(n, m). Throws Overflow past 2^64-1.
std::uint64_t partition_count(std::size_t n, std::size_t m);

/// Largest block diameter; 0 when every block is a singleton.
double diam_of(const Partition& d, const FiniteMetricSpace& x);
/// Smallest distance between points of different blocks; unbounded for one block.
Spacing alpha(const Partition& d, const FiniteMetricSpace& x);
/// Largest distance between points of different blocks; 0 for one block.
double beta(const Partition& d, const FiniteMetricSpace& x);

// ---------------------------------------------------------------------------
// Depth-first search over D_m(X) with incremental block statistics, used by
// every optimisation over partitions. Points are assigned in index order and
// children are visited in increasing block index, so leaves arrive in RGS
// order. The tracked statistics are monotone along a branch (block diameter
// and the largest separation only grow, the smallest separation only
// shrinks), which is what makes pruning on partial states sound.

struct PartialPartition {
    std::span<const int> labels;  // block index of points [0, depth)
    std::size_t depth = 0;
    std::size_t blocks = 0;
    double max_block_diam = 0.0;
    Spacing min_separation;  // unbounded until two blocks are in use
    double max_separation = 0.0;
};

enum class SearchAction { Continue, Prune, Stop };

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t leaves = 0;
    bool stopped = false;           // a callback returned Stop
    bool budget_exhausted = false;  // node budget ran out before the tree was exhausted
};

namespace detail {

template <class OnNode, class OnLeaf>
class PartitionSearch {
public:
    PartitionSearch(const FiniteMetricSpace& x, std::size_t m, OnNode& on_node, OnLeaf& on_leaf,
                    std::uint64_t budget)
        : x_(x), n_(x.size()), m_(m), on_node_(on_node), on_leaf_(on_leaf), budget_(budget), labels_(x.size(), 0) {}

    SearchStats run() {
        PartialPartition root;
        root.labels = std::span<const int>(labels_.data(), 1);
        root.depth = 1;
        root.blocks = 1;
        labels_[0] = 0;
        descend(root);
        return stats_;
    }

private:
    // Returns false when the whole search must stop.
    bool descend(const PartialPartition& node) {
        if (++stats_.nodes > budget_) {
            stats_.budget_exhausted = true;
            return false;
        }
        if (node.depth == n_) {
            if (node.blocks != m_) return true;
            ++stats_.leaves;
            if (on_leaf_(node) == SearchAction::Stop) {
                stats_.stopped = true;
                return false;
            }
            return true;
        }
        switch (on_node_(node)) {
            case SearchAction::Prune: return true;
            case SearchAction::Stop: stats_.stopped = true; return false;
            case SearchAction::Continue: break;
        }

        const std::size_t i = node.depth;
        const std::size_t remaining = n_ - i;  // points still to place, including i
        const std::size_t max_block = std::min(node.blocks, m_ - 1);
        for (std::size_t b = 0; b <= max_block; ++b) {
            const std::size_t blocks = b == node.blocks ? node.blocks + 1 : node.blocks;
            if (blocks + (remaining - 1) < m_) continue;  // cannot reach m blocks any more
            PartialPartition child = node;
            child.depth = i + 1;
            child.blocks = blocks;
            labels_[i] = static_cast<int>(b);
            child.labels = std::span<const int>(labels_.data(), i + 1);
            const auto row = x_.row(i);
            for (std::size_t j = 0; j < i; ++j) {
                const double d = row[j];
                if (labels_[j] == static_cast<int>(b)) {
                    if (d > child.max_block_diam) child.max_block_diam = d;
                } else {
                    child.min_separation = child.min_separation.min(Spacing(d));
                    if (d > child.max_separation) child.max_separation = d;
                }
            }
            if (!descend(child)) return false;
        }
        return true;
    }

    const FiniteMetricSpace& x_;
    std::size_t n_;
    std::size_t m_;
    OnNode& on_node_;
    OnLeaf& on_leaf_;
    std::uint64_t budget_;
    std::vector<int> labels_;
    SearchStats stats_;
};

void check_cardinality(std::size_t n, std::size_t m);

}  // namespace detail

/// `on_node(partial)` may prune the subtree below a partial assignment;
/// `on_leaf(complete)` sees each surviving member of D_m(X). Both return a
/// SearchAction. The node budget bounds the total work.
template <class OnNode, class OnLeaf>
SearchStats search_partitions(const FiniteMetricSpace& x, std::size_t m, OnNode&& on_node, OnLeaf&& on_leaf,
                              std::uint64_t node_budget = std::numeric_limits<std::uint64_t>::max()) {
    detail::check_cardinality(x.size(), m);
    detail::PartitionSearch<std::remove_reference_t<OnNode>, std::remove_reference_t<OnLeaf>> search(
        x, m, on_node, on_leaf, node_budget);
    return search.run();
}

}  // namespace ghs
