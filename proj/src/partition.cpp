#include "ghsimplex/partition.hpp"

#include <algorithm>
#include <limits>

#include "ghsimplex/error.hpp"

namespace ghs {

namespace detail {

void check_cardinality(std::size_t n, std::size_t m) {
    if (m < 1 || m > n) {
        throw Error(ErrorCode::BadCardinality,
                    "block count " + std::to_string(m) + " outside [1, " + std::to_string(n) + "]");
    }
}

}  // namespace detail

Partition::Partition(std::vector<int> rgs) : rgs_(std::move(rgs)) {
    int top = -1;
    for (int b : rgs_) top = std::max(top, b);
    blocks_.resize(static_cast<std::size_t>(top + 1));
    for (std::size_t i = 0; i < rgs_.size(); ++i) blocks_[static_cast<std::size_t>(rgs_[i])].push_back(i);
}

Partition Partition::from_rgs(std::vector<int> rgs) {
    if (rgs.empty()) throw Error(ErrorCode::BadCardinality, "partition of an empty set");
    int top = -1;
    for (int b : rgs) {
        if (b < 0 || b > top + 1) throw Error(ErrorCode::BadParams, "not a restricted growth string");
        top = std::max(top, b);
    }
    return Partition(std::move(rgs));
}

Partition Partition::from_blocks(const std::vector<std::vector<std::size_t>>& blocks, std::size_t n) {
    std::vector<int> owner(n, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw Error(ErrorCode::EmptySet, "partition has an empty block");
        for (std::size_t p : blocks[b]) {
            if (p >= n) throw Error(ErrorCode::BadParams, "block member out of range");
            if (owner[p] != -1) throw Error(ErrorCode::BadParams, "blocks are not disjoint");
            owner[p] = static_cast<int>(b);
        }
    }
    // Relabel blocks by first occurrence.
    std::vector<int> relabel(blocks.size(), -1);
    std::vector<int> rgs(n);
    int next = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (owner[i] == -1) throw Error(ErrorCode::BadParams, "blocks do not cover every point");
        auto& r = relabel[static_cast<std::size_t>(owner[i])];
        if (r == -1) r = next++;
        rgs[i] = r;
    }
    return Partition(std::move(rgs));
}

nlohmann::json Partition::to_json(const FiniteMetricSpace& x) const {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& blk : blocks_) {
        nlohmann::json labels = nlohmann::json::array();
        for (std::size_t p : blk) labels.push_back(x.label(p));
        out.push_back(std::move(labels));
    }
    return out;
}

std::string Partition::to_string(const FiniteMetricSpace& x) const {
    std::string out = "{";
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (b) out += ',';
        out += '{';
        for (std::size_t k = 0; k < blocks_[b].size(); ++k) {
            if (k) out += ',';
            out += x.label(blocks_[b][k]);
        }
        out += '}';
    }
    return out + "}";
}

PartitionEnumerator::PartitionEnumerator(std::size_t n, std::size_t m) : n_(n), m_(m), rgs_(n, 0) {
    detail::check_cardinality(n, m);
    // First string: zeros, then 1, 2, ..., m-1 in the last m-1 slots.
    for (std::size_t k = 1; k < m; ++k) rgs_[n - m + k] = static_cast<int>(k);
}

void PartitionEnumerator::next() {
    if (done_) return;
    const int last = static_cast<int>(m_) - 1;
    std::vector<int> prefix_max(n_);
    prefix_max[0] = rgs_[0];
    for (std::size_t i = 1; i < n_; ++i) prefix_max[i] = std::max(prefix_max[i - 1], rgs_[i]);

    for (std::size_t i = n_; i-- > 1;) {
        const int candidate = rgs_[i] + 1;
        if (candidate > prefix_max[i - 1] + 1 || candidate > last) continue;
        int top = std::max(prefix_max[i - 1], candidate);
        const std::size_t tail = n_ - 1 - i;
        if (static_cast<int>(tail) < last - top) continue;
        rgs_[i] = candidate;
        for (std::size_t j = i + 1; j < n_; ++j) {
            const int needed = last - top;
            const std::size_t slots = n_ - j;
            if (static_cast<int>(slots) > needed) {
                rgs_[j] = 0;
            } else {
                rgs_[j] = ++top;
            }
        }
        return;
    }
    done_ = true;
}

std::vector<Partition> enumerate_partitions(std::size_t n, std::size_t m) {
    std::vector<Partition> out;
    for (PartitionEnumerator e(n, m); !e.done(); e.next()) out.push_back(e.partition());
    return out;
}

std::uint64_t partition_count(std::size_t n, std::size_t m) {
    detail::check_cardinality(n, m);
    // Row-by-row recurrence S(i, k) = k S(i-1, k) + S(i-1, k-1).
    std::vector<std::uint64_t> row(m + 1, 0);
    row[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t k = std::min(i, m); k >= 1; --k) {
            std::uint64_t scaled = 0;
            std::uint64_t sum = 0;
            if (__builtin_mul_overflow(static_cast<std::uint64_t>(k), row[k], &scaled) ||
                __builtin_add_overflow(scaled, row[k - 1], &sum)) {
                throw Error(ErrorCode::Overflow, "S(" + std::to_string(n) + ", " + std::to_string(m) +
                                                     ") exceeds threshold 2^64-1");
            }
            row[k] = sum;
        }
        row[0] = 0;
    }
    return row[m];
}

double diam_of(const Partition& d, const FiniteMetricSpace& x) {
    double out = 0.0;
    for (const auto& blk : d.blocks())
        for (std::size_t a = 0; a < blk.size(); ++a)
            for (std::size_t b = a + 1; b < blk.size(); ++b) out = std::max(out, x(blk[a], blk[b]));
    return out;
}

Spacing alpha(const Partition& d, const FiniteMetricSpace& x) {
    Spacing out = Spacing::unbounded();
    const std::size_t n = d.point_count();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (d.block_of(i) != d.block_of(j)) out = out.min(Spacing(x(i, j)));
    return out;
}

double beta(const Partition& d, const FiniteMetricSpace& x) {
    double out = 0.0;
    const std::size_t n = d.point_count();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (d.block_of(i) != d.block_of(j)) out = std::max(out, x(i, j));
    return out;
}

}  // namespace ghs
