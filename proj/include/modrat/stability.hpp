#pragma once

// Stability of point configurations in P_n under the diagonal PGL(n+1)
// action with the symmetric linearization: a configuration of m+1 points
// is stable iff every proper linear subspace L satisfies
//   #(points in L) / (m+1) < (dim L + 1) / (n+1).

#include "modrat/matrix.hpp"

#include <optional>
#include <vector>

namespace modrat {

class ProjectiveConfig {
public:
    // Throws DomainError for an empty configuration, a coordinate vector
    // of the wrong length, or a zero vector.
    ProjectiveConfig(std::size_t ambient_dim, std::vector<std::vector<Rational>> points);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t size() const { return points_.size(); }
    const std::vector<std::vector<Rational>>& points() const { return points_; }
    // Points as rows of a (m+1) x (n+1) matrix.
    RationalMatrix as_matrix() const;

private:
    std::size_t ambient_dim_;
    std::vector<std::vector<Rational>> points_;
};

struct StabilityResult {
    bool stable = true;
    // Indices of every point lying in a violating subspace, ascending.
    std::optional<std::vector<std::size_t>> violating_subspace;
    std::optional<std::size_t> violating_dimension;  // projective dimension of that subspace
};

// Only spans of point subsets need testing: shrinking L to the span of the
// points it contains keeps the count and lowers dim L. Subsets of size
// <= n suffice since a proper span has rank <= n.
StabilityResult git_stable(const ProjectiveConfig& config);

}  // namespace modrat
