// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include "modrat/classification.hpp"
#include "modrat/conditions.hpp"
#include "modrat/report_io.hpp"
#include "modrat/stability.hpp"

#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>

using namespace modrat;

namespace {

// Collects the first few mismatches of a criterion.
struct Check {
    std::size_t checked = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        ++checked;
        if (!ok && failures.size() < 5) failures.push_back(what);
        if (!ok && failures.size() == 5) failures.emplace_back("...");
    }
    bool ok() const { return failures.empty(); }
};

std::string pair_path(const ReductionChain& chain, const Pair& start) { return chain_arrows(chain, start); }

void chain_reproduction(Check& c) {
    Classifier g6{Genus(6)};
    const auto a = g6.classify(Pair(15, 77));
    c.expect(a.nice_witness && pair_path(*a.nice_witness, a.pair) == "(15;77) -> (13;77) -> (1;6)",
             "g=6 (15;77) nice chain");

    const auto reduce_only = follow(Genus(2), Pair(7, 8), StepKind::Reduce);
    c.expect(pair_path(reduce_only, Pair(7, 8)) == "(7;8) -> (6;8) -> (4;8)", "g=2 (7;8) reduce-only chain");
    const auto dual_only = follow(Genus(2), Pair(7, 8), StepKind::DualReduce);
    c.expect(pair_path(dual_only, Pair(7, 8)) == "(7;8) -> (1;2)", "g=2 (7;8) dual chain");
    Classifier g2{Genus(2)};
    const auto b = g2.is_nice(Pair(7, 8));
    c.expect(b.verdict && b.witness && pair_path(*b.witness, Pair(7, 8)) == "(7;8) -> (1;2)", "g=2 (7;8) nice witness");

    const auto r = g6.classify(Pair(60, 307));
    c.expect(r.nice_witness && pair_path(*r.nice_witness, r.pair) == "(60;307) -> (53;307) -> (11;65) -> (1;6)",
             "g=6 (60;307) nice chain");
    for (const auto* chain : {&*a.nice_witness, &reduce_only, &dual_only, &*r.nice_witness}) {
        c.expect(!replay_chain(*chain, chain->steps.front().source), "chain replays");
    }
}

void family_claim(Check& c) {
    const Genus g(6);
    Classifier classifier(g);
    for (long m = 0; m <= 12; ++m) {
        const Pair p(11 + 7 * m, 62 + 35 * m);
        const std::string name = "m=" + std::to_string(m) + " " + to_string(p);
        c.expect(dual_reduce(g, p).target == Pair(7, 38), name + " dual-reduces to (7;38)");
        const bool nice = classifier.is_nice(p).verdict;
        if (m <= 6) c.expect(!nice, name + " is not nice");
        if (m == 7) c.expect(nice, name + " is nice");
        if (m % 2 == 0) c.expect(!nice, name + " (even m) is not nice");
        if (m >= 7) {
            const auto fine = classifier.is_fine(p);
            c.expect(fine.verdict && fine.witness && fine.witness->top.front() == p && !validate_diagram(*fine.witness), name + " is fine");
        }
    }
}

std::vector<Pair> window_pairs(long g, long n_max) {
    std::vector<Pair> out;
    for (long n = 1; n <= n_max; ++n)
        for (long d = n * (g - 1) + 1; d < n * g; ++d) out.emplace_back(n, d);
    return out;
}

void newstead_soundness(Check& c) {
    for (long g = 2; g <= 7; ++g) {
        Classifier classifier{Genus(g)};
        for (const auto& p : window_pairs(g, 12)) {
            if (newstead_condition(Genus(g), p)) {
                c.expect(classifier.is_nice(p).verdict, "g=" + std::to_string(g) + " " + to_string(p));
            }
        }
    }
}

void corollary(Check& c) {
    for (long g = 2; g <= 7; ++g) {
        Classifier classifier{Genus(g)};
        for (const auto& p : window_pairs(g, 12)) {
            if (!classifier.is_nice(p).verdict) continue;
            const long n = p.n.get_si(), d = p.d.get_si();
            c.expect(std::gcd(d, g) == 1 || std::gcd(d + n, g) == 1, "g=" + std::to_string(g) + " " + to_string(p));
        }
    }
}

void gcd_monotonicity(Check& c) {
    std::mt19937_64 rng(20240601);
    for (int chain = 0; chain < 10000; ++chain) {
        const long g = 2 + static_cast<long>(rng() % 6);
        const long n = 2 + static_cast<long>(rng() % 400);
        Pair p(n, n * (g - 1) + 1 + static_cast<long>(rng() % static_cast<unsigned long>(n - 1)));
        const Genus genus(g);
        while (window_status(genus, p) == WindowStatus::InWindow) {
            const auto step = rng() % 2 == 0 ? reduce(genus, p) : dual_reduce(genus, p);
            const Integer before = gcd(p.n, p.d), after = gcd(step.target.n, step.target.d);
            c.expect(after % before == 0, "g=" + std::to_string(g) + " " + to_string(p) + " -> " + to_string(step.target));
            p = step.target;
        }
    }
    for (long g = 2; g <= 7; ++g) {
        for (const auto& r : enumerate(Genus(g), Integer(12))) {
            if (r.is_nice) c.expect(r.gcd_nd == 1, "g=" + std::to_string(g) + " " + to_string(r.pair) + " nice but not coprime");
        }
    }
}

void predecessors_of_line(Check& c) {
    for (long g = 2; g <= 7; ++g) {
        const Genus genus(g);
        const Pair line(1, g);
        std::set<std::pair<long, long>> scan_reduce, scan_dual, expect_reduce, expect_dual;
        for (long n = 1; n <= 10; ++n) {
            for (long d = n * (g - 1) + 1; d < n * g; ++d) {
                if (auto s = oracle::scan_reduce(g, n, d); s && s->n == 1 && s->d == g) scan_reduce.insert({n, d});
                if (auto s = oracle::scan_dual(g, n, d); s && s->n == 1 && s->d == g) scan_dual.insert({n, d});
            }
            if (n >= 2) {
                expect_reduce.insert({n, n * g - 1});
                expect_dual.insert({n, n * g - n + 1});
            }
        }
        std::set<std::pair<long, long>> via_reduce, via_dual;
        for (const auto& p : predecessors_via_reduction(genus, line, Integer(10))) via_reduce.insert({p.pair.n.get_si(), p.pair.d.get_si()});
        for (const auto& p : predecessors_via_dual(genus, line, Integer(10))) via_dual.insert({p.pair.n.get_si(), p.pair.d.get_si()});
        const std::string name = "g=" + std::to_string(g);
        c.expect(via_reduce == expect_reduce, name + " reduce predecessors");
        c.expect(scan_reduce == expect_reduce, name + " reduce predecessors by scan");
        c.expect(via_dual == expect_dual, name + " dual predecessors");
        c.expect(scan_dual == expect_dual, name + " dual predecessors by scan");
    }
}

void dimension_identity(Check& c) {
    for (long g = 2; g <= 50; ++g) {
        for (long n = 2; n <= 50; ++n) {
            const auto id = quotient_dimension_identity(Genus(g), Integer(n));
            const long d = n * g;
            const long lhs = d * (n - 1) - n * n + 1 + (n - 1) * g;
            const long rhs = (n * n - 1) * (g - 1);
            c.expect(id.equal && id.lhs == lhs && id.rhs == rhs && lhs == rhs,
                     "g=" + std::to_string(g) + " n=" + std::to_string(n));
        }
    }
}

RationalMatrix vandermonde(std::size_t rows, std::size_t cols, long first) {
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        Rational x = first + static_cast<long>(r), power = 1;
        for (std::size_t col = 0; col < cols; ++col, power *= x) m(r, col) = power;
    }
    return m;
}

void condition_b_oracle(Check& c) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 1 + rng() % 4;
        const std::size_t d = n + rng() % (9 - n);
        const auto grid = oracle::random_grid(rng, d, n, -1, 1, trial % 3 == 0);
        const auto result = condition_b(RationalMatrix::from_rows(grid));
        c.expect(result.holds == oracle::full_spark(grid), "random " + std::to_string(d) + "x" + std::to_string(n));
        if (!result.holds) {
            c.expect(result.violating_rows && oracle::rank(oracle::pick_rows(grid, *result.violating_rows)) < n,
                     "violating rows are dependent");
        }
    }
    for (std::size_t n = 1; n <= 4; ++n) {
        for (std::size_t d = n; d <= 8; ++d) {
            for (long first : {-3L, 1L, 5L}) {
                c.expect(condition_b(vandermonde(d, n, first)).holds, "Vandermonde passes");
                auto phi = vandermonde(d, n, first);
                const std::size_t z = (d + n + static_cast<std::size_t>(first + 3)) % d;
                for (std::size_t j = 0; j < n; ++j) phi(z, j) = 0;
                c.expect(!condition_b(phi).holds, "zero row fails");
            }
        }
    }
}

void git_stability(Check& c) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t ambient = 1 + rng() % 3;
        const std::size_t count = 1 + rng() % 8;
        oracle::Grid pts;
        while (pts.size() < count) {
            auto p = oracle::random_grid(rng, 1, ambient + 1, -1, 1)[0];
            if (std::any_of(p.begin(), p.end(), [](const Rational& x) { return x != 0; })) pts.push_back(p);
        }
        const auto result = git_stable(ProjectiveConfig(ambient, pts));
        c.expect(result.stable == oracle::stable(pts, ambient), "random configuration " + std::to_string(trial));

        // The general-position corollary assumes at least n + 2 points.
        const std::size_t k = ambient + 1;
        bool general = count >= k + 1;
        for (unsigned mask = 0; general && mask < (1u << count); ++mask) {
            if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
            std::vector<std::size_t> rows;
            for (std::size_t i = 0; i < count; ++i)
                if (mask >> i & 1u) rows.push_back(i);
            general = oracle::rank(oracle::pick_rows(pts, rows)) == k;
        }
        if (general) c.expect(result.stable, "general configuration " + std::to_string(trial) + " is stable");
    }
    const auto repeated = git_stable(ProjectiveConfig(1, {{1, 2}, {2, 4}, {0, 1}, {1, 1}}));
    c.expect(!repeated.stable && repeated.violating_subspace &&
                 *repeated.violating_subspace == std::vector<std::size_t>{0, 1} && *repeated.violating_dimension == 0,
             "repeated point on P1");
}

void minor_expansion(Check& c) {
    std::mt19937_64 rng(10);
    for (auto [g, n] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 2}}) {
        for (int trial = 0; trial < 100; ++trial) {
            const auto grid = oracle::random_grid(rng, g, g * n, -9, 9, trial % 2 == 0);
            const auto id = coefficient_identity(OmegaMatrix(RationalMatrix::from_rows(grid)));
            c.expect(id.equal && id.coefficient == oracle::block_monomial_coefficient(grid),
                     "(g,n)=(" + std::to_string(g) + "," + std::to_string(n) + ") trial " + std::to_string(trial));
        }
    }
}

std::string describe(const RationalMatrix& m) {
    std::string s;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += i ? " [" : "[";
        for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? "," : "") + to_string(m(i, j));
        s += "]";
    }
    return s;
}

void genericity(Check& c) {
    // omega(i, j) = x_j^i with nodes 1..4: both 2x2 blocks are nonsingular.
    RationalMatrix nodes(2, 4);
    for (std::size_t j = 0; j < 4; ++j) {
        nodes(0, j) = 1;
        nodes(1, j) = static_cast<long>(j) + 1;
    }
    const OmegaMatrix omega(nodes);
    c.expect(omega.generic(), "omega is generic");
    const auto r = sample_generic_transformation(omega, 11, 500);
    c.expect(r.trials == 500, "500 trials");
    c.expect(r.condition_a_rate && *r.condition_a_rate == 1, "condition A rate is 1");
    c.expect(r.condition_b_rate == 1, "condition B rate is 1");
    for (const auto& m : r.condition_a_failures) c.expect(false, "condition A counterexample: " + describe(m));
    for (const auto& m : r.condition_b_failures) c.expect(false, "condition B counterexample: " + describe(m));
}

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<void(Check&)> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "chain reproduction", 1, chain_reproduction},
        {2, "(11+7m;62+35m) family", 10, family_claim},
        {3, "Newstead condition implies nice (g<=7, n<=12)", 30, newstead_soundness},
        {4, "nice pairs satisfy the gcd corollary (g<=7, n<=12)", 30, corollary},
        {5, "gcd divisibility along 10000 random chains", 10, gcd_monotonicity},
        {6, "one-step predecessors of (1;g)", 10, predecessors_of_line},
        {7, "quotient dimension identity", 1, dimension_identity},
        {8, "condition B against a rank oracle", 10, condition_b_oracle},
        {9, "GIT stability against brute force", 30, git_stability},
        {10, "block minor expansion identity", 30, minor_expansion},
        {11, "conditions A and B hold generically", 10, genericity},
    };
    int failed = 0;
    for (const auto& criterion : criteria) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            criterion.body(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = seconds < criterion.limit_seconds;
        const bool pass = check.ok() && in_time;
        failed += pass ? 0 : 1;
        std::cout << (pass ? "PASS" : "FAIL") << " [" << criterion.id << "] " << criterion.name << " ("
                  << check.checked << " checks, " << std::fixed << std::setprecision(3) << seconds << " s, limit "
                  << std::defaultfloat << criterion.limit_seconds << " s)\n";
        for (const auto& f : check.failures) std::cout << "    " << f << '\n';
        if (!in_time) std::cout << "    over the time limit\n";
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
