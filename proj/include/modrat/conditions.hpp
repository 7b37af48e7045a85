#pragma once

// Genericity conditions on an elementary transformation, given as a d x n
// matrix phi whose row j is the map at the j-th point, against an abstract
// g x d matrix omega of differential values omega_i(p_j).

#include "modrat/matrix.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace modrat {

class OmegaMatrix {
public:
    // Throws DomainError unless d is a positive multiple of g.
    explicit OmegaMatrix(RationalMatrix entries);

    std::size_t g() const { return entries_.rows(); }
    std::size_t d() const { return entries_.cols(); }
    std::size_t n() const { return entries_.cols() / entries_.rows(); }
    const RationalMatrix& entries() const { return entries_; }

    // Determinants of the g x g blocks on columns [s*g, (s+1)*g), s = 0..n-1.
    std::vector<Rational> block_minors() const;
    // Every block minor is nonzero.
    bool generic() const;

private:
    RationalMatrix entries_;
};

struct ConditionBResult {
    bool holds = true;
    std::optional<std::vector<std::size_t>> violating_rows;  // 0-based, ascending
};

// Every n-subset of the d rows is independent. Reports the
// lexicographically first dependent subset. Throws if d < n.
ConditionBResult condition_b(const RationalMatrix& phi);
// Same answer, subsets checked by an OpenMP team.
ConditionBResult condition_b_parallel(const RationalMatrix& phi);

// The d x d matrix of phi^0: entry (s*g + i, j) = phi(j, s) * omega(i, j).
RationalMatrix condition_a_matrix(const OmegaMatrix& omega, const RationalMatrix& phi);

bool condition_a(const OmegaMatrix& omega, const RationalMatrix& phi);

struct CoefficientIdentity {
    Rational coefficient;    // of b_11..b_g1 b_(g+1)2 .. b_dn in the b-determinant
    Rational minor_product;  // product of omega's consecutive block minors
    bool equal = false;
};

// The b-determinant is multilinear with each column's b's appearing
// linearly, so the block-diagonal monomial's coefficient is its value at
// the indicator assignment b_js = [column j lies in block s].
CoefficientIdentity coefficient_identity(const OmegaMatrix& omega);

// Entries are integers drawn uniformly from [-numerator_bound, numerator_bound].
struct SamplingGrid {
    Integer numerator_bound{1000000000};
};

struct SamplingResult {
    std::size_t trials = 0;
    bool empty = true;  // trials == 0; rates are 1 by convention
    bool omega_generic = false;
    std::optional<Rational> condition_a_rate;  // absent when omega is not generic
    Rational condition_b_rate{1};
    std::vector<RationalMatrix> condition_a_failures;
    std::vector<RationalMatrix> condition_b_failures;
};

// Trial t draws its matrix from a generator seeded by (seed, t), so the
// result does not depend on evaluation order.
RationalMatrix sample_transformation(std::size_t d, std::size_t n, std::uint64_t seed, std::uint64_t trial,
                                     const SamplingGrid& grid);

SamplingResult sample_generic_transformation(const OmegaMatrix& omega, std::uint64_t seed, std::size_t trials,
                                             const SamplingGrid& grid = {});
SamplingResult sample_generic_transformation_parallel(const OmegaMatrix& omega, std::uint64_t seed,
                                                      std::size_t trials, const SamplingGrid& grid = {});

// Every d x n matrix with entries drawn from `values`.
SamplingResult exhaustive_transformation_rates(const OmegaMatrix& omega, const std::vector<Rational>& values);

}  // namespace modrat
