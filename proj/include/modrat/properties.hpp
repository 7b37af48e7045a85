#pragma once

// Exhaustive and randomized checks of the arithmetic invariants of the
// reduction calculus. Backs the `verify` subcommand.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace modrat {

struct PropertyBounds {
    long genus_min = 2;
    long genus_max = 7;
    long n_max = 12;
    long dimension_bound = 50;  // identity checked for 2 <= n, g <= bound
    std::uint64_t seed = 1;
    std::size_t random_chains = 10000;
};

struct PropertyResult {
    std::string name;
    bool passed = true;
    std::size_t checked = 0;
    std::string counterexample;  // first failure, empty when passed
};

std::vector<PropertyResult> run_property_suite(const PropertyBounds& bounds);

}  // namespace modrat
