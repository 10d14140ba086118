#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "ghsimplex/correspondence.hpp"
#include "ghsimplex/error.hpp"
#include "support/fixtures.hpp"

using namespace ghs;
using ghs::testing::e1;

namespace {

Relation identity(std::size_t n) {
    std::vector<PointPair> p;
    for (std::size_t i = 0; i < n; ++i) p.emplace_back(i, i);
    return Relation(p);
}

// Irreducibility by definition: every pair (x, y) of the relation has x
// matched only to y, or y matched only to x.
bool is_irreducible_shape(const Relation& r, std::size_t nx, std::size_t ny) {
    std::vector<std::size_t> x_deg(nx, 0), y_deg(ny, 0);
    for (const auto& [a, b] : r.pairs()) {
        ++x_deg[a];
        ++y_deg[b];
    }
    // The relation is a union of "stars": each connected component has a
    // centre of degree equal to the component size. Equivalent check: for every
    // pair, one endpoint has degree 1.
    for (const auto& [a, b] : r.pairs())
        if (x_deg[a] != 1 && y_deg[b] != 1) return false;
    return true;
}

}  // namespace

TEST_CASE("relations and correspondences") {
    CHECK_THROWS_AS(Relation({}), Error);
    const Relation r({{1, 0}, {0, 0}, {1, 0}});
    CHECK(r.size() == 2);
    CHECK(r.contains({0, 0}));
    CHECK_FALSE(r.contains({0, 1}));
    CHECK(is_correspondence(r, 2, 1));
    CHECK_FALSE(is_correspondence(r, 3, 1));
    CHECK_FALSE(is_correspondence(r, 2, 2));
    try {
        Correspondence(r, 2, 2);
        FAIL("expected rejection");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotACorrespondence);
    }
}

TEST_CASE("distortion examples") {
    CHECK(distortion(identity(3), e1(), e1()) == 0);
    CHECK(distortion(Relation({{0, 1}}), e1(), simplex(4, 9)) == 0);
    CHECK(distortion(identity(2), simplex(2, 1), simplex(2, 3)) == 2);
}

TEST_CASE("distortion is monotone under inclusion") {
    std::mt19937_64 rng(2024);
    for (const auto& x : ghs::testing::random_spaces(30, 2, 6, 300)) {
        const auto y = ghs::testing::random_spaces(1, 2, 6, rng())[0];
        std::vector<PointPair> cells;
        for (std::size_t a = 0; a < x.size(); ++a)
            for (std::size_t b = 0; b < y.size(); ++b) cells.emplace_back(a, b);
        for (int trial = 0; trial < 20; ++trial) {
            std::shuffle(cells.begin(), cells.end(), rng);
            const std::size_t k2 = 1 + rng() % cells.size();
            const std::size_t k1 = 1 + rng() % k2;
            const Relation small({cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(k1)});
            const Relation big({cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(k2)});
            REQUIRE(distortion(small, x, y) <= distortion(big, x, y));
        }
    }
}

TEST_CASE("irreducible enumeration counts") {
    const auto p = ghs::testing::point();
    CHECK(enumerate_irreducible(p, p).size() == 1);
    CHECK(enumerate_irreducible(p, e1()).size() == 1);
    CHECK(enumerate_irreducible(p, e1())[0].pairs().size() == 3);
    // Two points each side: only the two bijections are irreducible; seven
    // relations are correspondences at all.
    const auto two = simplex(2, 1);
    CHECK(enumerate_irreducible(two, two).size() == 2);
    CHECK(ghs::testing::all_correspondences(2, 2).size() == 7);
}

TEST_CASE("irreducible enumeration matches the definition") {
    for (std::size_t nx = 1; nx <= 3; ++nx)
        for (std::size_t ny = 1; ny <= 3; ++ny) {
            std::set<Relation> expected;
            for (const auto& r : ghs::testing::all_correspondences(nx, ny))
                if (is_irreducible_shape(r, nx, ny)) expected.insert(r);
            std::set<Relation> got;
            std::size_t streamed = 0;
            for_each_irreducible(nx, ny, [&](const BlockMatching& bm) {
                got.insert(bm.to_correspondence(nx, ny).relation());
                ++streamed;
                return true;
            });
            CHECK(streamed == got.size());
            CHECK(got == expected);
            CHECK(irreducible_count_estimate(nx, ny) >= got.size());
        }
}

TEST_CASE("size threshold") {
    try {
        (void)gh_bruteforce(simplex(9, 1), simplex(9, 2));
        FAIL("expected refusal");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SizeThresholdExceeded);
    }
    CHECK_THROWS_AS(gh_bruteforce(e1(), e1(), 10), Error);
    CHECK(gh_bruteforce(e1(), e1(), 1000) == 0);
}

TEST_CASE("oracle examples") {
    CHECK(gh_bruteforce(e1(), e1()) == 0);
    CHECK(gh_bruteforce(ghs::testing::point(), e1()) == 1);
    for (std::size_t n = 1; n <= 5; ++n)
        for (double lambda : {0.5, 1.0, 2.0})
            for (double mu : {0.75, 3.0}) CHECK(gh_bruteforce(simplex(n, lambda), simplex(n, mu)) == doctest::Approx(n == 1 ? 0.0 : std::fabs(lambda - mu) / 2).epsilon(1e-12));
}

TEST_CASE("oracle agrees with minimisation over all correspondences") {
    const auto spaces = ghs::testing::random_spaces(24, 1, 3, 4242);
    for (std::size_t i = 0; i < spaces.size(); ++i)
        for (std::size_t j = 0; j < spaces.size(); j += 3) {
            const auto& x = spaces[i];
            const auto& y = spaces[j];
            const auto res = gh_bruteforce_detailed(x, y);
            REQUIRE(res.min_distortion == ghs::testing::brute_twice_gh(x, y));
            // The reported witness achieves the minimum.
            REQUIRE(distortion(res.best.to_correspondence(x.size(), y.size()), x, y) == res.min_distortion);
        }
}

TEST_CASE("oracle metric properties") {
    const auto spaces = ghs::testing::random_spaces(16, 1, 5, 99);
    for (std::size_t i = 0; i < spaces.size(); ++i)
        for (std::size_t j = i; j < spaces.size(); j += 2) {
            const auto& x = spaces[i];
            const auto& y = spaces[j];
            const double g = gh_bruteforce(x, y);
            REQUIRE(g == gh_bruteforce(y, x));
            REQUIRE(2 * g >= std::fabs(x.diam() - y.diam()) - 1e-12);
            REQUIRE(2 * g <= std::max(x.diam(), y.diam()) + 1e-12);
            for (double c : {0.5, 3.0}) {
                const double scaled = gh_bruteforce(scale(x, c), scale(y, c));
                REQUIRE(std::fabs(scaled - c * g) <= 1e-9 * std::max(1.0, c * g));
            }
        }
}

TEST_CASE("dis_RD closed form") {
    const auto x = e1();
    CHECK(dis_RD(Partition::from_rgs({0, 0, 1}), 1, x) == 1);
    CHECK(dis_RD(Partition::from_rgs({0, 1, 0}), 1, x) == 2);
    for (double lambda : {0.1, 1.0, 2.0}) CHECK(dis_RD(Partition::from_rgs({0, 0, 0}), lambda, x) == 2);

    for (const auto& y : ghs::testing::random_spaces(30, 1, 6, 555)) {
        for (std::size_t m = 1; m <= y.size(); ++m)
            for (const auto& d : enumerate_partitions(y.size(), m))
                for (double lambda : ghs::testing::lambda_grid(y)) {
                    const auto r = make_RD(d);
                    REQUIRE(dis_RD(d, lambda, y) == distortion(r, simplex(m, lambda), y));
                }
    }
}

TEST_CASE("pruned oracle equals the unpruned minimum over irreducible correspondences") {
    for (const auto& x : ghs::testing::random_spaces(12, 4, 5, 2600)) {
        for (std::size_t m : {2, 4, 6}) {
            const auto y = simplex(m, x.diam() * 0.6);
            double best = INFINITY;
            for (const auto& r : enumerate_irreducible(y, x)) best = std::min(best, distortion(r, y, x));
            REQUIRE(gh_bruteforce_detailed(y, x).min_distortion == best);
        }
    }
}
