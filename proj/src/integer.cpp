#include "modrat/integer.hpp"

#include <cctype>
#include <functional>
#include <vector>

namespace modrat {

Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer mod_floor(const Integer& a, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

std::vector<Integer> distinct_prime_factors(Integer g) {
    std::vector<Integer> factors;
    if (g < 2) return factors;
    for (Integer p = 2; p * p <= g; ++p) {
        if (mpz_divisible_p(g.get_mpz_t(), p.get_mpz_t()) != 0) {
            factors.push_back(p);
            while (mpz_divisible_p(g.get_mpz_t(), p.get_mpz_t()) != 0) g /= p;
        }
    }
    if (g > 1) factors.push_back(g);
    return factors;
}

bool is_prime_power(const Integer& g) {
    return distinct_prime_factors(g).size() == 1;
}

std::string to_string(const Integer& v) { return v.get_str(); }

std::optional<Integer> parse_integer(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::size_t i = 0;
    if (text[0] == '+' || text[0] == '-') i = 1;
    if (i == text.size()) return std::nullopt;
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) return std::nullopt;
    }
    // mpz_set_str rejects a leading '+'.
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    Integer v;
    if (v.set_str(digits, 10) != 0) return std::nullopt;
    return v;
}

std::optional<std::int64_t> to_int64(const Integer& v) {
    if (!v.fits_slong_p()) return std::nullopt;
    return static_cast<std::int64_t>(v.get_si());
}

std::size_t hash_value(const Integer& v) {
    const mpz_srcptr z = v.get_mpz_t();
    std::size_t h = static_cast<std::size_t>(mpz_sgn(z)) + 0x9e3779b97f4a7c15ULL;
    const std::size_t limbs = mpz_size(z);
    for (std::size_t i = 0; i < limbs; ++i) {
        h ^= std::hash<mp_limb_t>{}(mpz_getlimbn(z, static_cast<mp_size_t>(i))) + 0x9e3779b97f4a7c15ULL +
             (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace modrat
