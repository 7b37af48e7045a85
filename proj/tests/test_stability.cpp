#include "modrat/stability.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace modrat;

namespace {

using Points = std::vector<std::vector<Rational>>;

Points random_points(std::mt19937_64& rng, std::size_t count, std::size_t ambient, long bound) {
    Points pts;
    while (pts.size() < count) {
        auto p = oracle::random_grid(rng, 1, ambient + 1, -bound, bound)[0];
        if (std::any_of(p.begin(), p.end(), [](const Rational& x) { return x != 0; })) pts.push_back(p);
    }
    return pts;
}

bool all_subsets_independent(const Points& pts, std::size_t ambient) {
    const std::size_t k = std::min(pts.size(), ambient + 1);
    for (unsigned mask = 0; mask < (1u << pts.size()); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
        std::vector<std::size_t> rows;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (mask >> i & 1u) rows.push_back(i);
        if (oracle::rank(oracle::pick_rows(pts, rows)) != k) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("configuration validation") {
    CHECK_THROWS_AS(ProjectiveConfig(1, {}), DomainError);
    CHECK_THROWS_AS(ProjectiveConfig(1, {{1, 2, 3}}), DomainError);
    CHECK_THROWS_AS(ProjectiveConfig(1, {{0, 0}}), DomainError);
}

TEST_CASE("four distinct points on P1 are stable") {
    const auto r = git_stable(ProjectiveConfig(1, {{1, 0}, {0, 1}, {1, 1}, {1, -1}}));
    CHECK(r.stable);
    CHECK_FALSE(r.violating_subspace);
}

TEST_CASE("a repeated point on P1 is unstable") {
    const auto r = git_stable(ProjectiveConfig(1, {{1, 2}, {2, 4}, {0, 1}, {1, 1}}));
    CHECK_FALSE(r.stable);
    REQUIRE(r.violating_subspace);
    CHECK(*r.violating_subspace == std::vector<std::size_t>{0, 1});
    CHECK(*r.violating_dimension == 0);
}

TEST_CASE("six points of P2 in general position are stable") {
    const Points pts{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3}, {1, 4, 9}};
    REQUIRE(all_subsets_independent(pts, 2));
    CHECK(git_stable(ProjectiveConfig(2, pts)).stable);
}

TEST_CASE("collinear points in P2 violate along a line") {
    // 4 of 6 points on the line z = 0: 4/6 >= 2/3.
    const Points pts{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, 2, 0}, {0, 0, 1}, {1, 1, 1}};
    const auto r = git_stable(ProjectiveConfig(2, pts));
    CHECK_FALSE(r.stable);
    CHECK(*r.violating_dimension == 1);
    CHECK(*r.violating_subspace == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("stability agrees with the every-subset oracle on random configurations") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t ambient = 1 + rng() % 3;
        const std::size_t count = 1 + rng() % 8;
        const auto pts = random_points(rng, count, ambient, 1);
        const auto r = git_stable(ProjectiveConfig(ambient, pts));
        CHECK(r.stable == oracle::stable(pts, ambient));
        if (!r.stable) {
            // The witness set is exactly the points of one subspace, and it violates.
            const auto& inside = *r.violating_subspace;
            const std::size_t dim = oracle::rank(oracle::pick_rows(pts, inside));
            CHECK(dim == *r.violating_dimension + 1);
            CHECK(inside.size() * (ambient + 1) >= dim * count);
        }
        if (count >= ambient + 2 && all_subsets_independent(pts, ambient)) CHECK(r.stable);
    }
}

TEST_CASE("scaling and permuting points leaves the verdict unchanged") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t ambient = 1 + rng() % 2;
        auto pts = random_points(rng, 3 + rng() % 4, ambient, 2);
        const bool verdict = git_stable(ProjectiveConfig(ambient, pts)).stable;
        const std::size_t which = rng() % pts.size();
        const Rational scale(Integer(static_cast<long>(rng() % 5) + 1) * (trial % 2 ? -1 : 1), Integer(3));
        for (auto& x : pts[which]) x *= scale;
        std::shuffle(pts.begin(), pts.end(), rng);
        CHECK(git_stable(ProjectiveConfig(ambient, pts)).stable == verdict);
    }
}
