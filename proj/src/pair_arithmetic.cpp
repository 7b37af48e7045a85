#include "modrat/pair_arithmetic.hpp"

#include <sstream>

namespace modrat {

Genus::Genus(Integer g) : g_(std::move(g)) {
    if (g_ < 2) throw DomainError("genus must be at least 2, got " + to_string(g_));
}

Pair::Pair(Integer rank, Integer degree) : n(std::move(rank)), d(std::move(degree)) {
    if (n < 1 || d < 1) {
        throw DomainError("pair must have positive rank and degree, got (" + to_string(n) + ";" +
                          to_string(d) + ")");
    }
}

std::string to_string(const Pair& p) { return "(" + to_string(p.n) + ";" + to_string(p.d) + ")"; }

std::string to_string(WindowStatus w) {
    switch (w) {
        case WindowStatus::InWindow: return "in-window";
        case WindowStatus::TerminalDivisible: return "terminal-divisible";
        case WindowStatus::TerminalLine: return "terminal-line";
        case WindowStatus::Outside: return "outside";
    }
    return "outside";
}

std::optional<WindowStatus> parse_window_status(const std::string& text) {
    for (auto w : {WindowStatus::InWindow, WindowStatus::TerminalDivisible, WindowStatus::TerminalLine,
                   WindowStatus::Outside}) {
        if (to_string(w) == text) return w;
    }
    return std::nullopt;
}

std::string step_code(const ReductionStep& step) {
    return (step.kind == StepKind::Reduce ? "R" : "D") + to_string(step.k);
}

std::string step_codes(const ReductionChain& chain) {
    std::string out;
    for (const auto& s : chain.steps) {
        if (!out.empty()) out += ';';
        out += step_code(s);
    }
    return out;
}

WindowStatus window_status(const Genus& genus, const Pair& p) {
    const Integer& g = genus.value();
    if (p.n * (g - 1) < p.d && p.d < p.n * g) return WindowStatus::InWindow;
    if (p.n == 1 && p.d == g) return WindowStatus::TerminalLine;
    if (p.n >= 2 && p.d == p.n * g) return WindowStatus::TerminalDivisible;
    return WindowStatus::Outside;
}

namespace {

void require_in_window(const Genus& g, const Pair& p, const char* op) {
    if (window_status(g, p) != WindowStatus::InWindow) {
        throw DomainError(std::string(op) + " needs n(g-1) < d < ng; " + to_string(p) + " is " +
                          to_string(window_status(g, p)) + " for g=" + to_string(g.value()));
    }
}

// Lands `degree - k*rank` in the half-open interval (rank(g-1), rank*g].
ReductionStep canonical_step(const Genus& genus, StepKind kind, const Pair& source, const Integer& rank,
                             const Integer& degree) {
    const Integer& g = genus.value();
    const Integer low = rank * (g - 1);
    Integer target_d = mod_floor(degree - low - 1, rank) + low + 1;
    Integer k = (degree - target_d) / rank;
    return ReductionStep{kind, source, Pair(rank, std::move(target_d)), std::move(k)};
}

}  // namespace

ReductionStep reduce(const Genus& genus, const Pair& p) {
    require_in_window(genus, p, "reduce");
    const Integer& g = genus.value();
    return canonical_step(genus, StepKind::Reduce, p, p.n * g - p.d, p.d);
}

ReductionStep dual_reduce(const Genus& genus, const Pair& p) {
    require_in_window(genus, p, "dual_reduce");
    const Integer& g = genus.value();
    return canonical_step(genus, StepKind::DualReduce, p, p.d - p.n * (g - 1), p.n * (2 * g - 1) - p.d);
}

ReductionStep apply_step(const Genus& g, const Pair& p, StepKind kind) {
    return kind == StepKind::Reduce ? reduce(g, p) : dual_reduce(g, p);
}

std::vector<ReductionStep> children(const Genus& g, const Pair& p) {
    if (window_status(g, p) != WindowStatus::InWindow) return {};
    std::vector<ReductionStep> out{reduce(g, p)};
    auto dual = dual_reduce(g, p);
    if (dual.target != out.front().target || dual.k != out.front().k) out.push_back(std::move(dual));
    return out;
}

ReductionChain follow(const Genus& g, const Pair& p, StepKind kind) {
    ReductionChain chain(g);
    Pair current = p;
    while (window_status(g, current) == WindowStatus::InWindow) {
        chain.steps.push_back(apply_step(g, current, kind));
        current = chain.steps.back().target;
    }
    return chain;
}

std::optional<std::string> replay_chain(const ReductionChain& chain, const Pair& start) {
    const Genus& g = chain.genus;
    Pair current = start;
    for (std::size_t i = 0; i < chain.steps.size(); ++i) {
        const auto& step = chain.steps[i];
        std::ostringstream where;
        where << "step " << i << " ";
        if (step.source != current) {
            return where.str() + "starts at " + to_string(step.source) + ", expected " + to_string(current);
        }
        if (window_status(g, current) != WindowStatus::InWindow) {
            return where.str() + "source " + to_string(current) + " is not in-window";
        }
        const ReductionStep expected = apply_step(g, current, step.kind);
        if (expected.target != step.target || expected.k != step.k) {
            return where.str() + "records " + step_code(step) + "->" + to_string(step.target) + ", recomputed " +
                   step_code(expected) + "->" + to_string(expected.target);
        }
        if (!(step.target.n < step.source.n)) return where.str() + "does not decrease rank";
        current = step.target;
    }
    if (window_status(g, current) == WindowStatus::Outside) {
        return "chain ends outside the window at " + to_string(current);
    }
    return std::nullopt;
}

Integer moduli_dimension(const Genus& g, const Integer& n) {
    if (n < 1) throw DomainError("rank must be positive");
    return (n * n - 1) * (g.value() - 1);
}

Integer euler_characteristic(const Genus& g, const Pair& p) { return p.d + p.n * (1 - g.value()); }

DimensionIdentity quotient_dimension_identity(const Genus& genus, const Integer& n) {
    if (n < 1) throw DomainError("rank must be positive");
    const Integer& g = genus.value();
    const Integer d = n * g;
    Integer lhs = d * (n - 1) - n * n + 1 + (n - 1) * g;
    Integer rhs = (n * n - 1) * (g - 1);
    const bool equal = lhs == rhs;
    return {std::move(lhs), std::move(rhs), equal};
}

}  // namespace modrat
