#include "ghsimplex/correspondence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ghsimplex/error.hpp"

namespace ghs {

Relation::Relation(std::vector<PointPair> pairs) : pairs_(std::move(pairs)) {
    if (pairs_.empty()) throw Error(ErrorCode::EmptyRelation, "relation has no pairs");
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool Relation::contains(const PointPair& p) const { return std::binary_search(pairs_.begin(), pairs_.end(), p); }

bool is_correspondence(const Relation& r, std::size_t x_size, std::size_t y_size) {
    std::vector<bool> seen_x(x_size, false), seen_y(y_size, false);
    for (const auto& [a, b] : r.pairs()) {
        if (a >= x_size || b >= y_size) return false;
        seen_x[a] = true;
        seen_y[b] = true;
    }
    return std::all_of(seen_x.begin(), seen_x.end(), [](bool v) { return v; }) &&
           std::all_of(seen_y.begin(), seen_y.end(), [](bool v) { return v; });
}

Correspondence::Correspondence(Relation relation, std::size_t x_size, std::size_t y_size)
    : relation_(std::move(relation)) {
    if (!is_correspondence(relation_, x_size, y_size))
        throw Error(ErrorCode::NotACorrespondence, "relation does not project onto both spaces");
}

double distortion(const Relation& sigma, const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
    double out = 0.0;
    const auto& p = sigma.pairs();
    for (std::size_t s = 0; s < p.size(); ++s) {
        for (std::size_t t = s + 1; t < p.size(); ++t) {
            out = std::max(out, std::fabs(x(p[s].first, p[t].first) - y(p[s].second, p[t].second)));
        }
    }
    return out;
}

Correspondence BlockMatching::to_correspondence(std::size_t x_size, std::size_t y_size) const {
    std::vector<PointPair> pairs;
    for (std::size_t i = 0; i < x_blocks.size(); ++i)
        for (std::size_t a : x_blocks[i])
            for (std::size_t b : y_blocks[i]) pairs.emplace_back(a, b);
    return Correspondence(Relation(std::move(pairs)), x_size, y_size);
}

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    return __builtin_mul_overflow(a, b, &out) ? kSaturated : out;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    return __builtin_add_overflow(a, b, &out) ? kSaturated : out;
}

std::uint64_t stirling_or_saturate(std::size_t n, std::size_t k) {
    try {
        return partition_count(n, k);
    } catch (const Error&) {
        return kSaturated;
    }
}

}  // namespace

std::uint64_t irreducible_count_estimate(std::size_t x_size, std::size_t y_size) {
    std::uint64_t total = 0;
    std::uint64_t factorial = 1;
    for (std::size_t k = 1; k <= std::min(x_size, y_size); ++k) {
        factorial = sat_mul(factorial, k);
        total = sat_add(total, sat_mul(sat_mul(stirling_or_saturate(x_size, k), stirling_or_saturate(y_size, k)),
                                       factorial));
    }
    return total;
}

void check_oracle_size(std::size_t x_size, std::size_t y_size, std::uint64_t cap) {
    if (x_size == 0 || y_size == 0) throw Error(ErrorCode::ZeroPoints, "oracle needs non-empty spaces");
    const auto estimate = irreducible_count_estimate(x_size, y_size);
    if (estimate > cap) {
        throw Error(ErrorCode::SizeThresholdExceeded, "about " + std::to_string(estimate) +
                                                          " irreducible correspondences for sizes " +
                                                          std::to_string(x_size) + " x " + std::to_string(y_size) +
                                                          " exceeds cap " + std::to_string(cap));
    }
}

std::vector<Correspondence> enumerate_irreducible(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                                                  std::uint64_t cap) {
    std::vector<Correspondence> out;
    for_each_irreducible(
        x.size(), y.size(),
        [&](const BlockMatching& m) {
            out.push_back(m.to_correspondence(x.size(), y.size()));
            return true;
        },
        cap);
    return out;
}

namespace {

class OracleSearch {
public:
    OracleSearch(const FiniteMetricSpace& x, const FiniteMetricSpace& y) : x_(x), y_(y) {}

    OracleResult run() {
        const std::size_t kmax = std::min(x_.size(), y_.size());
        for (std::size_t k = 1; k <= kmax; ++k) {
            for (PartitionEnumerator ex(x_.size(), k); !ex.done(); ex.next()) {
                x_blocks_ = ex.partition().blocks();
                for (PartitionEnumerator ey(y_.size(), k); !ey.done(); ey.next()) {
                    y_blocks_ = ey.partition().blocks();
                    used_.assign(k, false);
                    image_.assign(k, 0);
                    partial_.assign(k + 1, 0.0);
                    assign(0);
                }
            }
        }
        return std::move(result_);
    }

private:
    // Distortion contributed by the pairs inside (X_i x Y_j) against those in (X_i' x Y_j').
    double block_pair_term(std::size_t i, std::size_t j, std::size_t i2, std::size_t j2) const {
        double out = 0.0;
        for (std::size_t a : x_blocks_[i])
            for (std::size_t a2 : x_blocks_[i2]) {
                const double dx = x_(a, a2);
                for (std::size_t b : y_blocks_[j])
                    for (std::size_t b2 : y_blocks_[j2]) out = std::max(out, std::fabs(dx - y_(b, b2)));
            }
        return out;
    }

    void assign(std::size_t i) {
        const std::size_t k = x_blocks_.size();
        if (i == k) {
            ++result_.matchings_completed;
            if (partial_[k] < best_) {
                best_ = partial_[k];
                result_.min_distortion = best_;
                result_.best.x_blocks = x_blocks_;
                result_.best.y_blocks.clear();
                for (std::size_t t = 0; t < k; ++t) result_.best.y_blocks.push_back(y_blocks_[image_[t]]);
            }
            return;
        }
        for (std::size_t j = 0; j < k; ++j) {
            if (used_[j]) continue;
            if (x_blocks_[i].size() > 1 && y_blocks_[j].size() > 1) continue;
            double dis = std::max(partial_[i], block_pair_term(i, j, i, j));
            for (std::size_t t = 0; t < i && dis < best_; ++t) dis = std::max(dis, block_pair_term(i, j, t, image_[t]));
            if (dis >= best_) continue;
            used_[j] = true;
            image_[i] = j;
            partial_[i + 1] = dis;
            assign(i + 1);
            used_[j] = false;
        }
    }

    const FiniteMetricSpace& x_;
    const FiniteMetricSpace& y_;
    std::vector<std::vector<std::size_t>> x_blocks_;
    std::vector<std::vector<std::size_t>> y_blocks_;
    std::vector<bool> used_;
    std::vector<std::size_t> image_;
    std::vector<double> partial_;
    double best_ = std::numeric_limits<double>::infinity();
    OracleResult result_;
};

}  // namespace

OracleResult gh_bruteforce_detailed(const FiniteMetricSpace& x, const FiniteMetricSpace& y, std::uint64_t cap) {
    check_oracle_size(x.size(), y.size(), cap);
    return OracleSearch(x, y).run();
}

double gh_bruteforce(const FiniteMetricSpace& x, const FiniteMetricSpace& y, std::uint64_t cap) {
    return gh_bruteforce_detailed(x, y, cap).gh();
}

double dis_RD(const Partition& d, double lambda, const FiniteMetricSpace& x) {
    const double block_diam = diam_of(d, x);
    const double spread = beta(d, x) - lambda;
    return alpha(d, x).max_with_difference(std::max(block_diam, spread), lambda);
}

Correspondence make_RD(const Partition& d) {
    std::vector<PointPair> pairs;
    for (std::size_t i = 0; i < d.point_count(); ++i) pairs.emplace_back(static_cast<std::size_t>(d.block_of(i)), i);
    return Correspondence(Relation(std::move(pairs)), d.block_count(), d.point_count());
}

}  // namespace ghs
