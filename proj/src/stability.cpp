#include "modrat/stability.hpp"

#include <set>

namespace modrat {

ProjectiveConfig::ProjectiveConfig(std::size_t ambient_dim, std::vector<std::vector<Rational>> points)
    : ambient_dim_(ambient_dim), points_(std::move(points)) {
    if (points_.empty()) throw DomainError("a configuration needs at least one point");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (points_[i].size() != ambient_dim_ + 1) {
            throw DomainError("point " + std::to_string(i) + " has " + std::to_string(points_[i].size()) +
                              " coordinates, expected " + std::to_string(ambient_dim_ + 1));
        }
        bool zero = true;
        for (const auto& c : points_[i]) zero = zero && c == 0;
        if (zero) throw DomainError("point " + std::to_string(i) + " is the zero vector");
    }
}

RationalMatrix ProjectiveConfig::as_matrix() const { return RationalMatrix::from_rows(points_); }

namespace {

// Whether `v` lies in the row space of the reduced echelon basis.
bool in_span(const RationalMatrix& basis, std::span<const Rational> v) {
    std::vector<Rational> rest(v.begin(), v.end());
    for (std::size_t r = 0; r < basis.rows(); ++r) {
        std::size_t pivot = 0;
        while (basis(r, pivot) == 0) ++pivot;
        if (rest[pivot] == 0) continue;
        const Rational factor = rest[pivot];
        for (std::size_t c = pivot; c < basis.cols(); ++c) rest[c] -= factor * basis(r, c);
    }
    for (const auto& x : rest) {
        if (x != 0) return false;
    }
    return true;
}

std::string span_key(const RationalMatrix& echelon) {
    std::string key;
    for (const auto& v : echelon.entries()) {
        key += to_string(v);
        key += ',';
    }
    return key;
}

}  // namespace

StabilityResult git_stable(const ProjectiveConfig& config) {
    const RationalMatrix points = config.as_matrix();
    const std::size_t count = config.size();
    const std::size_t n = config.ambient_dim();
    std::set<std::string> seen;

    std::vector<std::size_t> subset;
    for (std::size_t size = 1; size <= std::min(n, count); ++size) {
        subset.resize(size);
        for (std::size_t i = 0; i < size; ++i) subset[i] = i;
        while (true) {
            const RationalMatrix basis = row_echelon(points.select_rows(subset));
            const std::size_t r = basis.rows();  // dim L + 1
            if (r <= n && seen.insert(span_key(basis)).second) {
                std::vector<std::size_t> inside;
                for (std::size_t p = 0; p < count; ++p) {
                    if (in_span(basis, points.row(p))) inside.push_back(p);
                }
                // #inside / count < r / (n+1) must hold strictly.
                if (inside.size() * (n + 1) >= r * count) {
                    return {false, std::move(inside), r - 1};
                }
            }
            std::size_t i = size;
            while (i > 0 && subset[i - 1] == count - size + (i - 1)) --i;
            if (i == 0) break;
            ++subset[i - 1];
            for (std::size_t j = i; j < size; ++j) subset[j] = subset[j - 1] + 1;
        }
    }
    return {true, std::nullopt, std::nullopt};
}

}  // namespace modrat
