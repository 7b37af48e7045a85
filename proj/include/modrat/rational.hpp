#pragma once

#include "modrat/integer.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace modrat {

// Exact rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

// "p/q" or an integer token; q must be nonzero. nullopt when malformed.
std::optional<Rational> parse_rational(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& r);

}  // namespace modrat
