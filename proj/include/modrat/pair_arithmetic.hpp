#pragma once

// Integer calculus of rank/degree pairs: the window n(g-1) < d < ng,
// reductions, dual reductions, and the dimension bookkeeping around them.

#include "modrat/integer.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace modrat {

class Genus {
public:
    // Throws DomainError unless g >= 2.
    explicit Genus(Integer g);
    explicit Genus(long g) : Genus(Integer(g)) {}

    const Integer& value() const { return g_; }

    friend bool operator==(const Genus& a, const Genus& b) { return a.g_ == b.g_; }

private:
    Integer g_;
};

// A rank/degree pair (n;d).
struct Pair {
    Integer n;
    Integer d;

    Pair() = default;
    // Throws DomainError unless n >= 1 and d >= 1.
    Pair(Integer rank, Integer degree);
    Pair(long rank, long degree) : Pair(Integer(rank), Integer(degree)) {}

    friend bool operator==(const Pair& a, const Pair& b) { return a.n == b.n && a.d == b.d; }
    // Ordered by (n, d).
    friend bool operator<(const Pair& a, const Pair& b) {
        return a.n < b.n || (a.n == b.n && a.d < b.d);
    }
};

std::string to_string(const Pair& p);  // "(n;d)"

struct PairHash {
    std::size_t operator()(const Pair& p) const {
        return hash_value(p.n) * 1000003u ^ hash_value(p.d);
    }
};

enum class WindowStatus { InWindow, TerminalDivisible, TerminalLine, Outside };

std::string to_string(WindowStatus w);  // "in-window", "terminal-divisible", ...
std::optional<WindowStatus> parse_window_status(const std::string& text);

enum class StepKind { Reduce, DualReduce };

struct ReductionStep {
    StepKind kind;
    Pair source;
    Pair target;
    Integer k;

    friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

// Compact code used in CSV and regression output: "R<k>" or "D<k>".
std::string step_code(const ReductionStep& step);

struct ReductionChain {
    Genus genus;
    std::vector<ReductionStep> steps;

    explicit ReductionChain(Genus g) : genus(std::move(g)) {}
    ReductionChain(Genus g, std::vector<ReductionStep> s) : genus(std::move(g)), steps(std::move(s)) {}

    bool empty() const { return steps.empty(); }
    // Last target, or `start` for an empty chain.
    const Pair& end(const Pair& start) const { return steps.empty() ? start : steps.back().target; }

    friend bool operator==(const ReductionChain& a, const ReductionChain& b) {
        return a.genus == b.genus && a.steps == b.steps;
    }
};

std::string step_codes(const ReductionChain& chain);  // "R0;R71", empty for no steps

WindowStatus window_status(const Genus& g, const Pair& p);

// The canonical step: k >= 0 is the unique value landing the new degree in
// (n'(g-1), n'g]. Both throw DomainError unless p is in-window.
ReductionStep reduce(const Genus& g, const Pair& p);
ReductionStep dual_reduce(const Genus& g, const Pair& p);
ReductionStep apply_step(const Genus& g, const Pair& p, StepKind kind);

// Reduce then DualReduce; empty outside the window. Coinciding steps are
// kept once.
std::vector<ReductionStep> children(const Genus& g, const Pair& p);

// Follow a single step kind until the pair leaves the window.
ReductionChain follow(const Genus& g, const Pair& p, StepKind kind);

// Rebuilds every step of `chain` from `start` with reduce/dual_reduce and
// checks the recorded targets, k values and chain invariants. Returns a
// description of the first mismatch, or nullopt when the chain replays.
std::optional<std::string> replay_chain(const ReductionChain& chain, const Pair& start);

// (n^2 - 1)(g - 1).
Integer moduli_dimension(const Genus& g, const Integer& n);

// d + n(1 - g).
Integer euler_characteristic(const Genus& g, const Pair& p);

struct DimensionIdentity {
    Integer lhs;
    Integer rhs;
    bool equal;
};

// With d = ng: d(n-1) - n^2 + 1 + (n-1)g against (n^2-1)(g-1).
DimensionIdentity quotient_dimension_identity(const Genus& g, const Integer& n);

}  // namespace modrat
