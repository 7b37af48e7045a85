#include "modrat/conditions.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace modrat;

namespace {

RationalMatrix vandermonde(std::size_t rows, std::size_t cols, long first = 1) {
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        Rational x = first + static_cast<long>(r), power = 1;
        for (std::size_t c = 0; c < cols; ++c, power *= x) m(r, c) = power;
    }
    return m;
}

// omega(i, j) = x_j^i on distinct nodes: every block of g columns is a
// nonsingular Vandermonde matrix.
OmegaMatrix generic_omega(std::size_t g, std::size_t n) {
    RationalMatrix m(g, g * n);
    for (std::size_t j = 0; j < g * n; ++j) {
        Rational power = 1;
        for (std::size_t i = 0; i < g; ++i, power *= Rational(static_cast<long>(j) + 1)) m(i, j) = power;
    }
    return OmegaMatrix(m);
}

}  // namespace

TEST_CASE("condition B") {
    CHECK(condition_b(vandermonde(4, 2)).holds);

    RationalMatrix proportional{{1, 1}, {2, 2}, {1, 3}, {5, 7}};
    auto r = condition_b(proportional);
    CHECK_FALSE(r.holds);
    CHECK(*r.violating_rows == std::vector<std::size_t>{0, 1});

    RationalMatrix zero_row{{1, 2}, {3, 5}, {0, 0}};
    r = condition_b(zero_row);
    CHECK_FALSE(r.holds);
    CHECK(*r.violating_rows == std::vector<std::size_t>{0, 2});

    CHECK_THROWS_AS(condition_b(RationalMatrix(1, 2)), DomainError);
}

TEST_CASE("condition B with d = n is a determinant test") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 4;
        const auto phi = RationalMatrix::from_rows(oracle::random_grid(rng, n, n, -1, 1));
        CHECK(condition_b(phi).holds == (determinant(phi) != 0));
    }
}

TEST_CASE("condition B agrees with a rank oracle and is permutation invariant") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 3;
        const std::size_t d = n + rng() % 4;
        const auto grid = oracle::random_grid(rng, d, n, -2, 2);
        const auto phi = RationalMatrix::from_rows(grid);
        const auto r = condition_b(phi);
        CHECK(r.holds == oracle::full_spark(grid));
        if (!r.holds) CHECK(oracle::rank(oracle::pick_rows(grid, *r.violating_rows)) < n);

        std::vector<std::size_t> order(d);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        CHECK(condition_b(phi.select_rows(order)).holds == r.holds);
    }
}

TEST_CASE("condition A matrix layout") {
    // n = 1: entry (i, j) = a_j1 * omega_i(p_j).
    const OmegaMatrix id(RationalMatrix::identity(3));
    const RationalMatrix ones{{1}, {1}, {1}};
    CHECK(condition_a_matrix(id, ones) == RationalMatrix::identity(3));

    const OmegaMatrix omega(RationalMatrix{{1, 2, 3, 4}, {5, 6, 7, 8}});
    const RationalMatrix phi{{1, 2}, {3, 4}, {5, 6}, {7, 8}};
    const auto m = condition_a_matrix(omega, phi);
    for (std::size_t s = 0; s < 2; ++s)
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 4; ++j) CHECK(m(s * 2 + i, j) == phi(j, s) * omega.entries()(i, j));

    CHECK_THROWS_AS(condition_a_matrix(omega, RationalMatrix(4, 1)), DomainError);
    CHECK_THROWS_AS(condition_a_matrix(omega, RationalMatrix(3, 2)), DomainError);
    CHECK_THROWS_AS(OmegaMatrix(RationalMatrix(2, 3)), DomainError);
}

TEST_CASE("condition A") {
    // n = 1: det = prod a_j * det(omega).
    const OmegaMatrix omega1(RationalMatrix{{1, 1}, {1, 2}});
    CHECK(condition_a(omega1, RationalMatrix{{3}, {-2}}));
    CHECK(determinant(condition_a_matrix(omega1, RationalMatrix{{3}, {-2}})) == Rational(-6));

    const OmegaMatrix omega = generic_omega(2, 2);
    CHECK_FALSE(condition_a(omega, RationalMatrix{{1, 2}, {0, 0}, {3, 1}, {1, 1}}));

    // The block indicator pattern.
    RationalMatrix indicator(4, 2);
    for (std::size_t j = 0; j < 4; ++j) indicator(j, j / 2) = 1;
    CHECK(condition_a(omega, indicator));
}

TEST_CASE("condition A determinant matches the Leibniz expansion") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const auto omega = OmegaMatrix(RationalMatrix::from_rows(oracle::random_grid(rng, 2, 4, -4, 4, true)));
        const auto phi = RationalMatrix::from_rows(oracle::random_grid(rng, 4, 2, -4, 4, true));
        const auto m = condition_a_matrix(omega, phi);
        CHECK(determinant(m) == oracle::leibniz_det(oracle::to_grid(m)));
    }
}

TEST_CASE("condition A scales by c^g when one a-column is scaled") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t g = 2 + rng() % 2, n = 2;
        const auto omega = OmegaMatrix(RationalMatrix::from_rows(oracle::random_grid(rng, g, g * n, -5, 5)));
        auto phi = RationalMatrix::from_rows(oracle::random_grid(rng, g * n, n, -5, 5));
        const Rational before = determinant(condition_a_matrix(omega, phi));
        const Rational c(Integer(static_cast<long>(rng() % 7) - 3), Integer(2));
        const std::size_t s = rng() % n;
        for (std::size_t j = 0; j < phi.rows(); ++j) phi(j, s) *= c;
        Rational cg = 1;
        for (std::size_t i = 0; i < g; ++i) cg *= c;
        CHECK(determinant(condition_a_matrix(omega, phi)) == cg * before);
    }
}

TEST_CASE("zero row of phi fails both conditions") {
    std::mt19937_64 rng(29);
    const auto omega = generic_omega(2, 2);
    for (int trial = 0; trial < 50; ++trial) {
        auto phi = RationalMatrix::from_rows(oracle::random_grid(rng, 4, 2, -5, 5));
        const std::size_t z = rng() % 4;
        phi(z, 0) = 0;
        phi(z, 1) = 0;
        CHECK_FALSE(condition_a(omega, phi));
        CHECK_FALSE(condition_b(phi).holds);
    }
}

TEST_CASE("coefficient identity") {
    // Identity blocks.
    RationalMatrix blocks(2, 6);
    for (std::size_t s = 0; s < 3; ++s) {
        blocks(0, 2 * s) = 1;
        blocks(1, 2 * s + 1) = 1;
    }
    auto id = coefficient_identity(OmegaMatrix(blocks));
    CHECK(id.coefficient == 1);
    CHECK(id.minor_product == 1);
    CHECK(id.equal);

    // One singular block.
    const OmegaMatrix singular(RationalMatrix{{1, 2, 1, 0}, {2, 4, 0, 1}});
    CHECK_FALSE(singular.generic());
    id = coefficient_identity(singular);
    CHECK(id.coefficient == 0);
    CHECK(id.minor_product == 0);
    CHECK(id.equal);

    std::mt19937_64 rng(31);
    for (auto [g, n] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 2}}) {
        for (int trial = 0; trial < 5; ++trial) {
            const auto grid = oracle::random_grid(rng, g, g * n, -6, 6, true);
            id = coefficient_identity(OmegaMatrix(RationalMatrix::from_rows(grid)));
            CHECK(id.equal);
            CHECK(id.coefficient == oracle::block_monomial_coefficient(grid));
        }
    }
}

TEST_CASE("sampling") {
    const auto omega = generic_omega(2, 2);
    CHECK(omega.generic());

    auto r = sample_generic_transformation(omega, 1, 0);
    CHECK(r.empty);
    CHECK(*r.condition_a_rate == 1);
    CHECK(r.condition_b_rate == 1);

    r = sample_generic_transformation(omega, 42, 200);
    CHECK(r.trials == 200);
    CHECK(*r.condition_a_rate == 1);
    CHECK(r.condition_b_rate == 1);
    CHECK(r.condition_a_failures.empty());

    // Reproducible per seed; a different seed draws different matrices.
    CHECK(sample_transformation(4, 2, 9, 3, {}) == sample_transformation(4, 2, 9, 3, {}));
    CHECK_FALSE(sample_transformation(4, 2, 9, 3, {}) == sample_transformation(4, 2, 10, 3, {}));

    const OmegaMatrix degenerate(RationalMatrix{{1, 2, 1, 0}, {2, 4, 0, 1}});
    r = sample_generic_transformation(degenerate, 1, 10);
    CHECK_FALSE(r.omega_generic);
    CHECK_FALSE(r.condition_a_rate);
}

TEST_CASE("a coarse sampling grid does hit measure-zero failures") {
    SamplingGrid coarse;
    coarse.numerator_bound = 9;
    const auto r = sample_generic_transformation(generic_omega(2, 2), 1, 500, coarse);
    CHECK(r.condition_b_rate < 1);
    CHECK(r.condition_b_failures.size() > 0);
    for (const auto& m : r.condition_b_failures) CHECK_FALSE(oracle::full_spark(oracle::to_grid(m)));
}

TEST_CASE("exhaustive rates over {0,1} with n=1, d=2") {
    const OmegaMatrix omega(RationalMatrix{{1, 0}, {0, 1}});
    const auto r = exhaustive_transformation_rates(omega, {Rational(0), Rational(1)});
    CHECK(r.trials == 4);
    CHECK(r.condition_b_rate == Rational(1, 4));
    CHECK(*r.condition_a_rate == Rational(1, 4));
}
