#include "modrat/classification.hpp"

#include <omp.h>

#include <algorithm>
#include <deque>
#include <exception>
#include <set>

namespace modrat {

Classifier::Classifier(Genus g) : genus_(std::move(g)), line_(Integer(1), genus_.value()) {}

std::shared_ptr<const std::vector<Pair>> Classifier::descendants(const Pair& p) {
    {
        std::shared_lock lock(mutex_);
        if (auto it = descendants_.find(p); it != descendants_.end()) return it->second;
    }
    if (window_status(genus_, p) == WindowStatus::Outside) {
        throw DomainError("descendants undefined for " + to_string(p) + " outside the window at g=" +
                          to_string(genus_.value()));
    }
    std::vector<Pair> all{p};
    for (const auto& step : children(genus_, p)) {
        const auto below = descendants(step.target);
        all.insert(all.end(), below->begin(), below->end());
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    auto value = std::make_shared<const std::vector<Pair>>(std::move(all));

    std::unique_lock lock(mutex_);
    return descendants_.try_emplace(p, std::move(value)).first->second;
}

std::optional<std::size_t> Classifier::nice_distance(const Pair& p) {
    {
        std::shared_lock lock(mutex_);
        if (auto it = nice_distance_.find(p); it != nice_distance_.end()) return it->second;
    }
    std::optional<std::size_t> best;
    if (p == line_) {
        best = 0;
    } else {
        for (const auto& step : children(genus_, p)) {
            if (auto below = nice_distance(step.target); below && (!best || *below + 1 < *best)) best = *below + 1;
        }
    }
    std::unique_lock lock(mutex_);
    return nice_distance_.try_emplace(p, best).first->second;
}

NiceResult Classifier::is_nice(const Pair& p) {
    const auto window = window_status(genus_, p);
    if (window == WindowStatus::Outside) {
        return {false, std::nullopt, to_string(p) + " is outside the window; nice is undefined"};
    }
    if (window == WindowStatus::TerminalDivisible) {
        return {false, std::nullopt, to_string(p) + " is terminal-divisible; no reduction applies"};
    }
    auto distance = nice_distance(p);
    if (!distance) return {false, std::nullopt, {}};

    ReductionChain chain(genus_);
    Pair current = p;
    while (*distance > 0) {
        const auto options = children(genus_, current);
        auto next = std::find_if(options.begin(), options.end(), [&](const ReductionStep& s) {
            auto d = nice_distance(s.target);
            return d && *d + 1 == *distance;
        });
        chain.steps.push_back(*next);
        current = next->target;
        --*distance;
    }
    return {true, std::move(chain), {}};
}

std::optional<ReductionChain> Classifier::shortest_chain(const Pair& from, const Pair& to) {
    if (from == to) return ReductionChain(genus_);
    std::unordered_map<Pair, ReductionStep, PairHash> reached_by;
    std::deque<Pair> queue{from};
    while (!queue.empty()) {
        const Pair current = queue.front();
        queue.pop_front();
        for (auto& step : children(genus_, current)) {
            if (step.target == from || reached_by.contains(step.target)) continue;
            const Pair target = step.target;
            reached_by.emplace(target, std::move(step));
            if (target == to) {
                std::vector<ReductionStep> steps;
                for (Pair at = to; at != from;) {
                    const auto& s = reached_by.at(at);
                    steps.push_back(s);
                    at = s.source;
                }
                std::reverse(steps.begin(), steps.end());
                return ReductionChain(genus_, std::move(steps));
            }
            queue.push_back(target);
        }
    }
    return std::nullopt;
}

std::shared_ptr<const Classifier::LinkageIndex> Classifier::linkage_index(const Integer& bound) {
    {
        std::shared_lock lock(mutex_);
        if (linkage_ && linkage_->bound >= bound) return linkage_;
    }
    auto index = std::make_shared<LinkageIndex>();
    index->bound = bound;
    for (const auto& q : enumeration_points(genus_, bound)) {
        if (window_status(genus_, q) != WindowStatus::InWindow) continue;
        for (const auto& c : *descendants(q)) {
            if (gcd(c.n, c.d) == 1) index->tops_by_meet[c].push_back(q);
        }
    }
    std::unique_lock lock(mutex_);
    if (!linkage_ || linkage_->bound < bound) linkage_ = std::move(index);
    return linkage_;
}

FineResult Classifier::is_fine(const Pair& p) {
    const auto window = window_status(genus_, p);
    if (window != WindowStatus::InWindow && window != WindowStatus::TerminalLine) {
        throw DomainError("is_fine needs an in-window pair; " + to_string(p) + " is " + to_string(window));
    }
    if (auto nice = is_nice(p); nice.verdict) {
        return {true, AdmissibleDiagram{genus_, {p}, {}, std::move(*nice.witness)}};
    }
    // Fine pairs are coprime, and gcd only grows along chains, so a
    // non-coprime start has no coprime meet.
    if (gcd(p.n, p.d) != 1) return {false, std::nullopt};

    const auto index = linkage_index(p.n);
    struct Parent {
        Pair previous;
        Pair meet;
    };
    std::unordered_map<Pair, std::optional<Parent>, PairHash> parent;
    parent.emplace(p, std::nullopt);
    std::deque<Pair> queue{p};
    while (!queue.empty()) {
        const Pair q = queue.front();
        queue.pop_front();
        if (auto nice = is_nice(q); nice.verdict) {
            std::vector<Pair> top;
            std::vector<Pair> meets;
            for (Pair at = q;;) {
                top.push_back(at);
                const auto& link = parent.at(at);
                if (!link) break;
                meets.push_back(link->meet);
                at = link->previous;
            }
            std::reverse(top.begin(), top.end());
            std::reverse(meets.begin(), meets.end());
            AdmissibleDiagram diagram{genus_, top, {}, std::move(*nice.witness)};
            for (std::size_t i = 0; i < meets.size(); ++i) {
                diagram.links.push_back(DiagramLink{*shortest_chain(top[i], meets[i]),
                                                    *shortest_chain(top[i + 1], meets[i]), meets[i]});
            }
            return {true, std::move(diagram)};
        }
        for (const auto& c : *descendants(q)) {
            if (gcd(c.n, c.d) != 1) continue;
            auto it = index->tops_by_meet.find(c);
            if (it == index->tops_by_meet.end()) continue;
            for (const auto& next : it->second) {
                if (next.n > p.n) break;  // sorted by rank
                if (parent.contains(next)) continue;
                parent.emplace(next, Parent{q, c});
                queue.push_back(next);
            }
        }
    }
    return {false, std::nullopt};
}

ClassificationReport Classifier::classify(const Pair& p) {
    const auto window = window_status(genus_, p);
    ClassificationReport r{genus_,
                           p,
                           window,
                           gcd(p.n, p.d),
                           false,
                           std::nullopt,
                           false,
                           std::nullopt,
                           newstead_condition(genus_, p),
                           gcd_corollary(genus_, p),
                           moduli_dimension(genus_, p.n),
                           quotient_dimension_identity(genus_, p.n)};
    auto nice = is_nice(p);
    r.is_nice = nice.verdict;
    r.nice_witness = std::move(nice.witness);
    if (window == WindowStatus::InWindow || window == WindowStatus::TerminalLine) {
        auto fine = is_fine(p);
        r.is_fine = fine.verdict;
        r.fine_witness = std::move(fine.witness);
    }
    return r;
}

std::optional<std::string> validate_diagram(const AdmissibleDiagram& diagram) {
    const Genus& g = diagram.genus;
    if (diagram.top.empty()) return "diagram has no top row";
    if (diagram.links.size() + 1 != diagram.top.size()) return "expected one link between consecutive top pairs";
    const Pair& start = diagram.top.front();
    for (std::size_t i = 0; i < diagram.top.size(); ++i) {
        const Pair& q = diagram.top[i];
        const auto w = window_status(g, q);
        if (w != WindowStatus::InWindow && !(w == WindowStatus::TerminalLine && diagram.top.size() == 1)) {
            return "top pair " + to_string(q) + " is " + to_string(w);
        }
        if (q.n > start.n) return "top pair " + to_string(q) + " has rank above " + to_string(start.n);
    }
    for (std::size_t i = 0; i < diagram.links.size(); ++i) {
        const auto& link = diagram.links[i];
        if (gcd(link.meet.n, link.meet.d) != 1) return "meet " + to_string(link.meet) + " is not coprime";
        for (const auto& [chain, from] : {std::pair{&link.left_chain, &diagram.top[i]},
                                          std::pair{&link.right_chain, &diagram.top[i + 1]}}) {
            if (auto err = replay_chain(*chain, *from)) return "link " + std::to_string(i) + ": " + *err;
            if (chain->end(*from) != link.meet) {
                return "link " + std::to_string(i) + ": chain from " + to_string(*from) + " does not end at " +
                       to_string(link.meet);
            }
        }
    }
    const Pair& last = diagram.top.back();
    if (auto err = replay_chain(diagram.terminal_nice_witness, last)) return "terminal witness: " + *err;
    if (diagram.terminal_nice_witness.end(last) != Pair(Integer(1), g.value())) {
        return "terminal witness does not reach (1;g)";
    }
    return std::nullopt;
}

std::shared_ptr<const std::vector<Pair>> descendants(const Genus& g, const Pair& p) {
    return Classifier(g).descendants(p);
}
NiceResult is_nice(const Genus& g, const Pair& p) { return Classifier(g).is_nice(p); }
FineResult is_fine(const Genus& g, const Pair& p) { return Classifier(g).is_fine(p); }

namespace {

std::vector<Pair> points_of_rank(const Genus& genus, const Integer& n) {
    const Integer& g = genus.value();
    std::vector<Pair> out;
    if (n == 1) {
        out.emplace_back(Integer(1), g);
        return out;
    }
    for (Integer d = n * (g - 1) + 1; d < n * g; ++d) out.emplace_back(n, d);
    return out;
}

}  // namespace

std::vector<Pair> enumeration_points(const Genus& g, const Integer& n_max) {
    std::vector<Pair> out;
    for (Integer n = 1; n <= n_max; ++n) {
        auto row = points_of_rank(g, n);
        out.insert(out.end(), row.begin(), row.end());
    }
    return out;
}

std::vector<ClassificationReport> enumerate(const Genus& g, const Integer& n_max) {
    if (n_max < 1) throw DomainError("n_max must be at least 1");
    Classifier classifier(g);
    std::vector<ClassificationReport> out;
    for (const auto& p : enumeration_points(g, n_max)) out.push_back(classifier.classify(p));
    return out;
}

void enumerate_stream(const Genus& g, const Integer& n_max, bool parallel,
                      const std::function<void(const ClassificationReport&)>& sink) {
    if (n_max < 1) throw DomainError("n_max must be at least 1");
    Classifier classifier(g);
    for (Integer n = 1; n <= n_max; ++n) {
        const auto row = points_of_rank(g, n);
        if (!parallel) {
            for (const auto& p : row) sink(classifier.classify(p));
            continue;
        }
        std::vector<std::optional<ClassificationReport>> reports(row.size());
        std::exception_ptr failure;
        const auto count = static_cast<std::ptrdiff_t>(row.size());
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            try {
                reports[static_cast<std::size_t>(i)] = classifier.classify(row[static_cast<std::size_t>(i)]);
            } catch (...) {
#pragma omp critical(modrat_enumerate_failure)
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
        for (const auto& r : reports) sink(*r);
    }
}

std::vector<ClassificationReport> enumerate_parallel(const Genus& g, const Integer& n_max) {
    std::vector<ClassificationReport> out;
    enumerate_stream(g, n_max, true, [&](const ClassificationReport& r) { out.push_back(r); });
    return out;
}

bool newstead_condition(const Genus& genus, const Pair& p) {
    const Integer r = mod_floor(p.d, p.n);
    if (r == mod_floor(Integer(1), p.n) || r == mod_floor(Integer(-1), p.n)) return true;
    if (gcd(p.n, p.d) != 1) return false;
    const auto primes = distinct_prime_factors(genus.value());
    if (primes.size() == 1) return true;
    return primes.size() >= 2 && primes[0] + primes[1] > p.n;
}

bool gcd_corollary(const Genus& genus, const Pair& p) {
    const Integer& g = genus.value();
    return gcd(p.d, g) == 1 || gcd(Integer(p.d + p.n), g) == 1;
}

namespace {

// Solves ng = target.d + (k+1) target.n for increasing k; `degree_of(n)`
// recovers the predecessor's degree and `kind` confirms the canonical step.
template <typename DegreeOf>
std::vector<Predecessor> predecessors(const Genus& genus, const Pair& target, const Integer& n_max, StepKind kind,
                                      DegreeOf degree_of) {
    const auto w = window_status(genus, target);
    if (w != WindowStatus::InWindow && w != WindowStatus::TerminalLine) {
        throw DomainError("predecessors need an in-window or (1;g) target; " + to_string(target) + " is " +
                          to_string(w));
    }
    const Integer& g = genus.value();
    std::vector<Predecessor> out;
    for (Integer k = 0;; ++k) {
        const Integer total = target.d + (k + 1) * target.n;
        if (total > n_max * g) break;
        if (mpz_divisible_p(total.get_mpz_t(), g.get_mpz_t()) == 0) continue;
        const Integer n = total / g;
        const Integer d = degree_of(n);
        if (n < 1 || d < 1) continue;
        const Pair candidate(n, d);
        if (window_status(genus, candidate) != WindowStatus::InWindow) continue;
        const auto step = apply_step(genus, candidate, kind);
        if (step.target == target && step.k == k) out.push_back({candidate, k});
    }
    return out;
}

}  // namespace

std::vector<Predecessor> predecessors_via_reduction(const Genus& g, const Pair& target, const Integer& n_max) {
    return predecessors(g, target, n_max, StepKind::Reduce,
                        [&](const Integer& n) { return Integer(n * g.value() - target.n); });
}

std::vector<Predecessor> predecessors_via_dual(const Genus& g, const Pair& target, const Integer& n_max) {
    return predecessors(g, target, n_max, StepKind::DualReduce,
                        [&](const Integer& n) { return Integer(n * (g.value() - 1) + target.n); });
}

bool verify_gcd_lemma(const Genus& g, const Pair& p) {
    const bool parent_coprime = gcd(p.n, p.d) == 1;
    for (const auto& step : {reduce(g, p), dual_reduce(g, p)}) {
        if (gcd(step.target.n, step.target.d) == 1 && !parent_coprime) return false;
    }
    return true;
}

}  // namespace modrat
