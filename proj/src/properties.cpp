#include "modrat/properties.hpp"

#include "modrat/classification.hpp"

#include <random>
#include <set>

namespace modrat {

namespace {

class Recorder {
public:
    explicit Recorder(std::string name) { result_.name = std::move(name); }

    void check(bool ok, const std::string& what) {
        ++result_.checked;
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.counterexample = what;
        }
    }

    PropertyResult done() { return std::move(result_); }

private:
    PropertyResult result_;
};

std::string at(const Genus& g, const Pair& p) { return "g=" + to_string(g.value()) + " " + to_string(p); }

bool divides(const Integer& a, const Integer& b) { return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0; }

}  // namespace

std::vector<PropertyResult> run_property_suite(const PropertyBounds& bounds) {
    Recorder steps("step invariants (rank decrease, canonical k, gcd divisibility)");
    Recorder euler("euler characteristic 0 < r < n in the window");
    Recorder gcd_lemma("coprime child implies coprime parent");
    Recorder nice_coprime("nice implies coprime");
    Recorder corollary("nice implies gcd(d,g)=1 or gcd(d+n,g)=1");
    Recorder newstead("newstead condition implies nice");
    Recorder fine("nice implies fine, fine implies coprime");
    Recorder replay("witness chains and diagrams replay");
    Recorder chains("gcd non-decreasing along random chains");
    Recorder preds("one-step predecessors of (1;g)");
    Recorder dims("quotient dimension identity");
    Recorder determinism("serial and parallel enumeration agree");

    std::mt19937_64 rng(bounds.seed);
    std::vector<std::pair<long, Pair>> window_pairs;

    for (long gv = bounds.genus_min; gv <= bounds.genus_max; ++gv) {
        const Genus g(gv);
        const Integer& G = g.value();
        const auto reports = enumerate(g, Integer(bounds.n_max));
        const auto parallel = enumerate_parallel(g, Integer(bounds.n_max));
        determinism.check(reports.size() == parallel.size(), "report count differs at g=" + std::to_string(gv));

        for (std::size_t i = 0; i < reports.size(); ++i) {
            const auto& r = reports[i];
            const Pair& p = r.pair;
            if (i < parallel.size()) {
                const auto& q = parallel[i];
                determinism.check(q.pair == p && q.is_nice == r.is_nice && q.is_fine == r.is_fine &&
                                      q.nice_witness == r.nice_witness,
                                  at(g, p));
            }
            if (r.window == WindowStatus::InWindow) {
                window_pairs.emplace_back(gv, p);
                const Integer chi = euler_characteristic(g, p);
                euler.check(chi > 0 && chi < p.n, at(g, p));
                for (const auto& step : {reduce(g, p), dual_reduce(g, p)}) {
                    const Pair& t = step.target;
                    steps.check(t.n < p.n, at(g, p) + " rank does not drop");
                    steps.check(step.k >= 0 && t.n * (G - 1) < t.d && t.d <= t.n * G,
                                at(g, p) + " degree outside (n'(g-1), n'g]");
                    for (const Integer& other : {Integer(step.k - 1), Integer(step.k + 1)}) {
                        const Integer base = step.kind == StepKind::Reduce ? p.d : Integer(p.n * (2 * G - 1) - p.d);
                        const Integer alt = base - other * t.n;
                        steps.check(other < 0 || !(t.n * (G - 1) < alt && alt <= t.n * G),
                                    at(g, p) + " k not unique");
                    }
                    steps.check(divides(gcd(p.n, p.d), gcd(t.n, t.d)), at(g, p) + " gcd does not divide");
                }
                gcd_lemma.check(verify_gcd_lemma(g, p), at(g, p));
                newstead.check(!newstead_condition(g, p) || r.is_nice, at(g, p));
            }
            if (r.is_nice) {
                nice_coprime.check(r.gcd_nd == 1, at(g, p));
                corollary.check(gcd_corollary(g, p), at(g, p));
                fine.check(r.is_fine, at(g, p) + " nice but not fine");
                replay.check(r.nice_witness && !replay_chain(*r.nice_witness, p) &&
                                 r.nice_witness->end(p) == Pair(Integer(1), G),
                             at(g, p) + " nice witness");
                if (r.nice_witness) {
                    Pair current = p;
                    for (const auto& s : r.nice_witness->steps) {
                        chains.check(divides(gcd(current.n, current.d), gcd(s.target.n, s.target.d)), at(g, p));
                        current = s.target;
                    }
                }
            }
            if (r.is_fine) {
                fine.check(r.gcd_nd == 1, at(g, p) + " fine but not coprime");
                replay.check(r.fine_witness && !validate_diagram(*r.fine_witness), at(g, p) + " fine diagram");
            }
        }

        // Predecessors of (1;g) against a scan of every in-window pair.
        const Pair line(Integer(1), G);
        std::vector<Pair> by_reduce, by_dual;
        for (const auto& p : enumeration_points(g, Integer(bounds.n_max))) {
            if (window_status(g, p) != WindowStatus::InWindow) continue;
            if (reduce(g, p).target == line) by_reduce.push_back(p);
            if (dual_reduce(g, p).target == line) by_dual.push_back(p);
        }
        std::vector<Pair> expect_reduce, expect_dual, got_reduce, got_dual;
        for (long n = 2; n <= bounds.n_max; ++n) {
            expect_reduce.emplace_back(Integer(n), Integer(n) * G - 1);
            expect_dual.emplace_back(Integer(n), Integer(n) * G - n + 1);
        }
        for (const auto& q : predecessors_via_reduction(g, line, Integer(bounds.n_max))) got_reduce.push_back(q.pair);
        for (const auto& q : predecessors_via_dual(g, line, Integer(bounds.n_max))) got_dual.push_back(q.pair);
        preds.check(by_reduce == expect_reduce && got_reduce == expect_reduce, "reduce at g=" + std::to_string(gv));
        preds.check(by_dual == expect_dual && got_dual == expect_dual, "dual at g=" + std::to_string(gv));
    }

    for (std::size_t i = 0; i < bounds.random_chains && !window_pairs.empty(); ++i) {
        const auto& [gv, start] = window_pairs[rng() % window_pairs.size()];
        const Genus g(gv);
        Pair current = start;
        while (window_status(g, current) == WindowStatus::InWindow) {
            const auto next = rng() % 2 == 0 ? reduce(g, current) : dual_reduce(g, current);
            chains.check(divides(gcd(current.n, current.d), gcd(next.target.n, next.target.d)),
                         at(g, start) + " via " + to_string(current));
            current = next.target;
        }
    }

    for (long gv = 2; gv <= bounds.dimension_bound; ++gv) {
        for (long n = 2; n <= bounds.dimension_bound; ++n) {
            const auto id = quotient_dimension_identity(Genus(gv), Integer(n));
            dims.check(id.equal && id.rhs == moduli_dimension(Genus(gv), Integer(n)),
                       "g=" + std::to_string(gv) + " n=" + std::to_string(n));
        }
    }

    std::vector<PropertyResult> out;
    for (auto* r : {&steps, &euler, &gcd_lemma, &nice_coprime, &corollary, &newstead, &fine, &replay, &chains,
                    &preds, &dims, &determinism}) {
        out.push_back(r->done());
    }
    return out;
}

}  // namespace modrat
