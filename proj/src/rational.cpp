#include "modrat/rational.hpp"

namespace modrat {

std::optional<Rational> parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        auto v = parse_integer(text);
        if (!v) return std::nullopt;
        return Rational(*v);
    }
    auto num = parse_integer(text.substr(0, slash));
    auto den = parse_integer(text.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    Rational r(*num, *den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) {
    Rational r = value;
    r.canonicalize();
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace modrat
