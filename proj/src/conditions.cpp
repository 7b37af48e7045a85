#include "modrat/conditions.hpp"

#include <omp.h>

#include <algorithm>
#include <random>

namespace modrat {

OmegaMatrix::OmegaMatrix(RationalMatrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() == 0 || entries_.cols() == 0 || entries_.cols() % entries_.rows() != 0) {
        throw DomainError("omega must be g x d with d a positive multiple of g, got " +
                          std::to_string(entries_.rows()) + "x" + std::to_string(entries_.cols()));
    }
}

std::vector<Rational> OmegaMatrix::block_minors() const {
    std::vector<Rational> out;
    std::vector<std::size_t> cols(g());
    for (std::size_t s = 0; s < n(); ++s) {
        for (std::size_t i = 0; i < g(); ++i) cols[i] = s * g() + i;
        out.push_back(determinant(entries_.select_cols(cols)));
    }
    return out;
}

bool OmegaMatrix::generic() const {
    const auto minors = block_minors();
    return std::none_of(minors.begin(), minors.end(), [](const Rational& m) { return m == 0; });
}

namespace {

void require_tall(const RationalMatrix& phi) {
    if (phi.cols() == 0 || phi.rows() < phi.cols()) {
        throw DomainError("condition B needs a d x n matrix with d >= n >= 1, got " + std::to_string(phi.rows()) +
                          "x" + std::to_string(phi.cols()));
    }
}

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

bool independent(const RationalMatrix& phi, const std::vector<std::size_t>& rows) {
    return determinant(phi.select_rows(rows)) != 0;
}

}  // namespace

ConditionBResult condition_b(const RationalMatrix& phi) {
    require_tall(phi);
    for (const auto& subset : combinations(phi.rows(), phi.cols())) {
        if (!independent(phi, subset)) return {false, subset};
    }
    return {true, std::nullopt};
}

ConditionBResult condition_b_parallel(const RationalMatrix& phi) {
    require_tall(phi);
    const auto subsets = combinations(phi.rows(), phi.cols());
    const auto count = static_cast<std::ptrdiff_t>(subsets.size());
    std::ptrdiff_t first_failure = count;
#pragma omp parallel for schedule(dynamic) reduction(min : first_failure)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        if (i < first_failure && !independent(phi, subsets[static_cast<std::size_t>(i)])) first_failure = i;
    }
    if (first_failure == count) return {true, std::nullopt};
    return {false, subsets[static_cast<std::size_t>(first_failure)]};
}

RationalMatrix condition_a_matrix(const OmegaMatrix& omega, const RationalMatrix& phi) {
    const std::size_t g = omega.g(), d = omega.d();
    if (phi.rows() != d || phi.cols() * g != d) {
        throw DomainError("condition A needs phi of shape " + std::to_string(d) + "x" + std::to_string(d / g) +
                          ", got " + std::to_string(phi.rows()) + "x" + std::to_string(phi.cols()));
    }
    RationalMatrix out(d, d);
    for (std::size_t s = 0; s < phi.cols(); ++s) {
        for (std::size_t i = 0; i < g; ++i) {
            for (std::size_t j = 0; j < d; ++j) out(s * g + i, j) = phi(j, s) * omega.entries()(i, j);
        }
    }
    return out;
}

bool condition_a(const OmegaMatrix& omega, const RationalMatrix& phi) {
    return determinant(condition_a_matrix(omega, phi)) != 0;
}

CoefficientIdentity coefficient_identity(const OmegaMatrix& omega) {
    const std::size_t g = omega.g(), d = omega.d(), n = omega.n();
    RationalMatrix indicator(d, n);
    for (std::size_t j = 0; j < d; ++j) indicator(j, j / g) = 1;
    CoefficientIdentity out;
    out.coefficient = determinant(condition_a_matrix(omega, indicator));
    out.minor_product = 1;
    for (const auto& m : omega.block_minors()) out.minor_product *= m;
    out.equal = out.coefficient == out.minor_product;
    return out;
}

RationalMatrix sample_transformation(std::size_t d, std::size_t n, std::uint64_t seed, std::uint64_t trial,
                                     const SamplingGrid& grid) {
    if (grid.numerator_bound < 0 || !grid.numerator_bound.fits_slong_p()) {
        throw DomainError("sampling bound must be a non-negative machine integer");
    }
    const long bound = grid.numerator_bound.get_si();
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<long> dist(-bound, bound);
    RationalMatrix m(d, n);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < n; ++c) m(r, c) = Rational(dist(rng));
    }
    return m;
}

namespace {

struct TrialOutcome {
    bool a = true;
    bool b = true;
};

TrialOutcome evaluate(const OmegaMatrix& omega, bool generic, const RationalMatrix& phi) {
    TrialOutcome t;
    if (generic) t.a = condition_a(omega, phi);
    t.b = condition_b(phi).holds;
    return t;
}

SamplingResult aggregate(bool generic, const std::vector<RationalMatrix>& samples,
                         const std::vector<TrialOutcome>& outcomes) {
    SamplingResult r;
    r.trials = samples.size();
    r.empty = samples.empty();
    r.omega_generic = generic;
    std::size_t a_pass = 0, b_pass = 0;
    for (std::size_t t = 0; t < samples.size(); ++t) {
        if (outcomes[t].a) {
            ++a_pass;
        } else {
            r.condition_a_failures.push_back(samples[t]);
        }
        if (outcomes[t].b) {
            ++b_pass;
        } else {
            r.condition_b_failures.push_back(samples[t]);
        }
    }
    const auto rate = [&](std::size_t pass) {
        if (r.empty) return Rational(1);
        Rational q(Integer(static_cast<unsigned long>(pass)), Integer(static_cast<unsigned long>(r.trials)));
        q.canonicalize();
        return q;
    };
    if (generic) r.condition_a_rate = rate(a_pass);
    r.condition_b_rate = rate(b_pass);
    return r;
}

}  // namespace

SamplingResult sample_generic_transformation(const OmegaMatrix& omega, std::uint64_t seed, std::size_t trials,
                                             const SamplingGrid& grid) {
    const bool generic = omega.generic();
    std::vector<RationalMatrix> samples;
    std::vector<TrialOutcome> outcomes;
    for (std::size_t t = 0; t < trials; ++t) {
        samples.push_back(sample_transformation(omega.d(), omega.n(), seed, t, grid));
        outcomes.push_back(evaluate(omega, generic, samples.back()));
    }
    return aggregate(generic, samples, outcomes);
}

SamplingResult sample_generic_transformation_parallel(const OmegaMatrix& omega, std::uint64_t seed,
                                                      std::size_t trials, const SamplingGrid& grid) {
    const bool generic = omega.generic();
    std::vector<RationalMatrix> samples(trials);
    std::vector<TrialOutcome> outcomes(trials);
    const auto count = static_cast<std::ptrdiff_t>(trials);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t t = 0; t < count; ++t) {
        const auto i = static_cast<std::size_t>(t);
        samples[i] = sample_transformation(omega.d(), omega.n(), seed, i, grid);
        outcomes[i] = evaluate(omega, generic, samples[i]);
    }
    return aggregate(generic, samples, outcomes);
}

SamplingResult exhaustive_transformation_rates(const OmegaMatrix& omega, const std::vector<Rational>& values) {
    if (values.empty()) throw DomainError("exhaustive sampling needs at least one value");
    const bool generic = omega.generic();
    const std::size_t cells = omega.d() * omega.n();
    std::vector<std::size_t> digits(cells, 0);
    std::vector<RationalMatrix> samples;
    std::vector<TrialOutcome> outcomes;
    while (true) {
        RationalMatrix phi(omega.d(), omega.n());
        for (std::size_t c = 0; c < cells; ++c) phi(c / omega.n(), c % omega.n()) = values[digits[c]];
        outcomes.push_back(evaluate(omega, generic, phi));
        samples.push_back(std::move(phi));
        std::size_t c = cells;
        while (c > 0 && ++digits[c - 1] == values.size()) digits[--c] = 0;
        if (c == 0) break;
    }
    return aggregate(generic, samples, outcomes);
}

}  // namespace modrat
