#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "ghsimplex/metric_space.hpp"
#include "ghsimplex/partition.hpp"

namespace ghs {

using PointPair = std::pair<std::size_t, std::size_t>;  // (index in X, index in Y)

/// Non-empty subset of X x Y, kept sorted and duplicate-free.
class Relation {
public:
    explicit Relation(std::vector<PointPair> pairs);
    const std::vector<PointPair>& pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }
    bool contains(const PointPair& p) const;

    friend bool operator==(const Relation&, const Relation&) = default;
    friend auto operator<=>(const Relation&, const Relation&) = default;

private:
    std::vector<PointPair> pairs_;
};

/// A relation whose projections cover all of X and all of Y.
class Correspondence {
public:
    Correspondence(Relation relation, std::size_t x_size, std::size_t y_size);
    const Relation& relation() const { return relation_; }
    const std::vector<PointPair>& pairs() const { return relation_.pairs(); }

private:
    Relation relation_;
};

bool is_correspondence(const Relation& r, std::size_t x_size, std::size_t y_size);

/// max | |xx'| - |yy'| | over pairs of related pairs.
double distortion(const Relation& sigma, const FiniteMetricSpace& x, const FiniteMetricSpace& y);
inline double distortion(const Correspondence& r, const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
    return distortion(r.relation(), x, y);
}

/// The block form of an irreducible correspondence: block i of X is matched
/// with block i of Y, and in every matched pair at least one side is a
/// singleton. The correspondence is the union of the block products.
struct BlockMatching {
    std::vector<std::vector<std::size_t>> x_blocks;
    std::vector<std::vector<std::size_t>> y_blocks;

    Correspondence to_correspondence(std::size_t x_size, std::size_t y_size) const;
};

/// Upper estimate of the number of irreducible correspondences:
/// sum_k S(#X, k) S(#Y, k) k!, saturating at 2^64-1.
std::uint64_t irreducible_count_estimate(std::size_t x_size, std::size_t y_size);

/// Throws SizeThresholdExceeded when the estimate exceeds `cap`.
void check_oracle_size(std::size_t x_size, std::size_t y_size, std::uint64_t cap);

/// Streams every irreducible correspondence exactly once: block count k
/// ascending, then partitions of X and of Y in RGS order, then bijections in
/// lexicographic order. `visit(const BlockMatching&)` returns false to stop.
template <class Visit>
void for_each_irreducible(std::size_t x_size, std::size_t y_size, Visit&& visit,
                          std::uint64_t cap = kDefaultEnumerationCap);

std::vector<Correspondence> enumerate_irreducible(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                                                  std::uint64_t cap = kDefaultEnumerationCap);

struct OracleResult {
    double min_distortion = 0.0;  // 2 d_GH
    BlockMatching best;
    std::uint64_t matchings_completed = 0;

    double gh() const { return min_distortion / 2; }
};

/// Exact d_GH(X, Y) by minimising distortion over all irreducible
/// correspondences. Bijections are built block by block and abandoned as soon
/// as the partial distortion reaches the incumbent; the minimum is unaffected.
OracleResult gh_bruteforce_detailed(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                                    std::uint64_t cap = kDefaultEnumerationCap);
double gh_bruteforce(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                     std::uint64_t cap = kDefaultEnumerationCap);

/// Closed form of dis R_D for the correspondence that sends the i-th vertex
/// of an m-point simplex of edge lambda onto block i of D:
/// max{diam D, lambda - alpha(D), beta(D) - lambda}.
double dis_RD(const Partition& d, double lambda, const FiniteMetricSpace& x);

/// R_D itself, as a correspondence between simplex(m, .) and X.
Correspondence make_RD(const Partition& d);

// ---------------------------------------------------------------------------

template <class Visit>
void for_each_irreducible(std::size_t x_size, std::size_t y_size, Visit&& visit, std::uint64_t cap) {
    check_oracle_size(x_size, y_size, cap);
    const std::size_t kmax = std::min(x_size, y_size);
    BlockMatching m;
    for (std::size_t k = 1; k <= kmax; ++k) {
        for (PartitionEnumerator ex(x_size, k); !ex.done(); ex.next()) {
            const auto xp = ex.partition();
            for (PartitionEnumerator ey(y_size, k); !ey.done(); ey.next()) {
                const auto yp = ey.partition();
                std::vector<std::size_t> perm(k);
                for (std::size_t i = 0; i < k; ++i) perm[i] = i;
                do {
                    bool ok = true;
                    for (std::size_t i = 0; i < k && ok; ++i)
                        ok = xp.block(i).size() == 1 || yp.block(perm[i]).size() == 1;
                    if (!ok) continue;
                    m.x_blocks = xp.blocks();
                    m.y_blocks.clear();
                    for (std::size_t i = 0; i < k; ++i) m.y_blocks.push_back(yp.blocks()[perm[i]]);
                    if (!visit(static_cast<const BlockMatching&>(m))) return;
                } while (std::next_permutation(perm.begin(), perm.end()));
            }
        }
    }
}

}  // namespace ghs
