#pragma once

// Search over the reduction tree: nice pairs (reachable to (1;g)), fine
// pairs (linked to a nice pair through coprime meets), enumeration of the
// lattice cone and one-step predecessor generation.

#include "modrat/pair_arithmetic.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace modrat {

struct NiceResult {
    bool verdict = false;
    std::optional<ReductionChain> witness;
    // Empty when the question applies; otherwise why the verdict is false.
    std::string status;
};

struct DiagramLink {
    ReductionChain left_chain;   // from top[i] down to meet
    ReductionChain right_chain;  // from top[i+1] down to meet
    Pair meet;
};

// Zig-zag  top[0]   top[1] ... top[t]
//              \   /    \        /
//              meet_1  ...  meet_t
// with top[t] nice. A nice input is the degenerate diagram t = 0.
struct AdmissibleDiagram {
    Genus genus;
    std::vector<Pair> top;
    std::vector<DiagramLink> links;
    ReductionChain terminal_nice_witness;
};

// nullopt when the diagram is admissible and every chain replays.
std::optional<std::string> validate_diagram(const AdmissibleDiagram& diagram);

struct FineResult {
    bool verdict = false;
    std::optional<AdmissibleDiagram> witness;
};

struct ClassificationReport {
    Genus genus;
    Pair pair;
    WindowStatus window;
    Integer gcd_nd;
    bool is_nice = false;
    std::optional<ReductionChain> nice_witness;
    bool is_fine = false;
    std::optional<AdmissibleDiagram> fine_witness;
    bool newstead_condition = false;
    bool gcd_corollary_holds = false;
    Integer moduli_dimension;
    DimensionIdentity quotient_identity;
};

// Memoizing search engine for one genus. Memo tables are insert-only and
// guarded, so one Classifier may be shared by concurrent workers.
class Classifier {
public:
    explicit Classifier(Genus g);

    const Genus& genus() const { return genus_; }

    // All pairs reachable by zero or more steps, sorted by (n, d).
    // Throws DomainError for Outside pairs.
    std::shared_ptr<const std::vector<Pair>> descendants(const Pair& p);

    NiceResult is_nice(const Pair& p);

    // Breadth-first search over in-window pairs of rank <= p.n, linked when
    // their descendant sets share a coprime pair. Accepts in-window pairs
    // and (1;g); throws DomainError otherwise.
    FineResult is_fine(const Pair& p);

    ClassificationReport classify(const Pair& p);

    // Shortest chain from `from` to `to`, Reduce preferred on ties.
    std::optional<ReductionChain> shortest_chain(const Pair& from, const Pair& to);

private:
    struct LinkageIndex {
        Integer bound;
        // coprime pair -> in-window pairs (rank <= bound) having it as descendant, sorted
        std::unordered_map<Pair, std::vector<Pair>, PairHash> tops_by_meet;
    };

    // Steps to (1;g) along a shortest chain; nullopt if unreachable.
    std::optional<std::size_t> nice_distance(const Pair& p);
    std::shared_ptr<const LinkageIndex> linkage_index(const Integer& bound);

    Genus genus_;
    Pair line_;  // (1;g)

    std::shared_mutex mutex_;
    std::unordered_map<Pair, std::shared_ptr<const std::vector<Pair>>, PairHash> descendants_;
    std::unordered_map<Pair, std::optional<std::size_t>, PairHash> nice_distance_;
    std::shared_ptr<const LinkageIndex> linkage_;
};

// Free-function forms; each builds a fresh Classifier.
std::shared_ptr<const std::vector<Pair>> descendants(const Genus& g, const Pair& p);
NiceResult is_nice(const Genus& g, const Pair& p);
FineResult is_fine(const Genus& g, const Pair& p);

// In-window lattice points with 1 <= n <= n_max plus (1;g), ordered by (n, d).
std::vector<Pair> enumeration_points(const Genus& g, const Integer& n_max);

// Serial reference.
std::vector<ClassificationReport> enumerate(const Genus& g, const Integer& n_max);

// OpenMP over the points of each rank; same output order as enumerate().
std::vector<ClassificationReport> enumerate_parallel(const Genus& g, const Integer& n_max);

// Emits reports rank by rank in (n, d) order without buffering the cone.
void enumerate_stream(const Genus& g, const Integer& n_max, bool parallel,
                      const std::function<void(const ClassificationReport&)>& sink);

// d = +-1 mod n; or coprime with g a prime power; or coprime with the two
// smallest distinct primes of g summing past n.
bool newstead_condition(const Genus& g, const Pair& p);

// gcd(d, g) = 1 or gcd(d + n, g) = 1.
bool gcd_corollary(const Genus& g, const Pair& p);

struct Predecessor {
    Pair pair;
    Integer k;

    friend bool operator==(const Predecessor&, const Predecessor&) = default;
};

// In-window pairs of rank <= n_max whose canonical reduction (resp. dual
// reduction) lands on `target`, in increasing rank. Generated from
// ng = d' + (k+1)n' and confirmed by replaying the step.
std::vector<Predecessor> predecessors_via_reduction(const Genus& g, const Pair& target, const Integer& n_max);
std::vector<Predecessor> predecessors_via_dual(const Genus& g, const Pair& target, const Integer& n_max);

// For both children: gcd(child) = 1 implies gcd(p) = 1.
bool verify_gcd_lemma(const Genus& g, const Pair& p);

}  // namespace modrat
