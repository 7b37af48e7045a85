#include "modrat/classification.hpp"
#include "modrat/conditions.hpp"
#include "modrat/report_io.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace modrat;

TEST_CASE("parallel enumeration matches the serial reference") {
    for (long g : {2L, 3L, 6L, 12L}) {
        const auto serial = enumerate(Genus(g), Integer(10));
        const auto parallel = enumerate_parallel(Genus(g), Integer(10));
        REQUIRE(serial.size() == parallel.size());
        for (std::size_t i = 0; i < serial.size(); ++i)
            CHECK(serialize_report(serial[i], OutputFormat::Json) == serialize_report(parallel[i], OutputFormat::Json));
    }
}

TEST_CASE("parallel condition B matches the serial reference") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 3;
        const std::size_t d = n + rng() % 5;
        const auto phi = RationalMatrix::from_rows(oracle::random_grid(rng, d, n, -1, 1));
        const auto a = condition_b(phi);
        const auto b = condition_b_parallel(phi);
        CHECK(a.holds == b.holds);
        CHECK(a.violating_rows == b.violating_rows);
    }
}

TEST_CASE("parallel sampling matches the serial reference") {
    SamplingGrid coarse;
    coarse.numerator_bound = 3;
    RationalMatrix m{{1, 1, 1, 1}, {1, 2, 3, 4}};
    const OmegaMatrix omega(m);
    for (std::uint64_t seed : {1u, 2u, 99u}) {
        const auto a = sample_generic_transformation(omega, seed, 120, coarse);
        const auto b = sample_generic_transformation_parallel(omega, seed, 120, coarse);
        CHECK(a.condition_a_rate == b.condition_a_rate);
        CHECK(a.condition_b_rate == b.condition_b_rate);
        CHECK(a.condition_a_failures == b.condition_a_failures);
        CHECK(a.condition_b_failures == b.condition_b_failures);
    }
}
