#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace modrat {

// All rank/degree/genus arithmetic is done on unbounded integers.
using Integer = mpz_class;

// Raised when an input violates an operation's precondition.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Integer gcd(const Integer& a, const Integer& b);

// Floor-mod with a non-negative result for positive modulus.
Integer mod_floor(const Integer& a, const Integer& m);

bool is_prime_power(const Integer& g);

// Distinct prime factors of g in increasing order (trial division up to sqrt(g)).
std::vector<Integer> distinct_prime_factors(Integer g);

std::string to_string(const Integer& v);

// Accepts an optional sign followed by decimal digits, nothing else.
std::optional<Integer> parse_integer(std::string_view text);

// Fits in a signed 64-bit word.
std::optional<std::int64_t> to_int64(const Integer& v);

std::size_t hash_value(const Integer& v);

}  // namespace modrat
