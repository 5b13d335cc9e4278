#pragma once

#include <optional>
#include <string>
#include <vector>

#include "irrt/enumerate.hpp"
#include "irrt/graph.hpp"

namespace irrt {

enum class Family {
    tree,
    unicyclic,
    bicyclic_all,
    bicyclic_infinity_l1,
    bicyclic_infinity_l2plus,
    bicyclic_theta,
    connected_all,
};

std::string to_string(Family f);
std::optional<Family> family_from_string(const std::string& name);

/// One distinct irr_t value of a family with every degree sequence attaining
/// it. `graph_count` and `witness` are filled by graph-level searches only.
struct RankedValue {
    long value = 0;
    std::vector<DegreeSequence> sequences;  // lexicographically decreasing
    long graph_count = 0;
    std::optional<Graph> witness;  // smallest canonical code among the extremal graphs

    bool same_minimum(const RankedValue& other) const {
        return value == other.value && sequences == other.sequences;
    }
};

struct KMinimal {
    std::vector<RankedValue> graph_level;
    std::optional<std::vector<RankedValue>> sequence_level;  // families decidable from the sequence

    /// True when there is no sequence-level result or it matches in value
    /// and sequence set at every rank.
    bool levels_agree() const;
};

/// The k smallest distinct irr_t values over a family, graph-level and, for
/// tree / unicyclic / bicyclic_all / connected_all, sequence-level as well.
KMinimal k_minimal(GraphCatalog& catalog, Family family, int n, int k);

/// Sequence-level ranking over all connected-realizable sequences with n
/// vertices and m edges (any m when absent).
std::vector<RankedValue> k_minimal_sequences(int n, std::optional<int> m, int k);

enum class Verdict { pass, fail, informational };
std::string to_string(Verdict v);

struct Expectation {
    long value = 0;
    std::vector<DegreeSequence> sequences;
};

struct VerificationReport {
    Family family = Family::tree;
    int n = 0;
    std::vector<RankedValue> ranks;
    std::vector<std::optional<Expectation>> expected;  // one slot per checked rank; empty below threshold
    std::vector<Verdict> verdict;                      // one per checked rank

    bool passed() const;
};

/// Closed-form minima for the family at n. Slots whose theorem threshold
/// exceeds n stay empty.
std::vector<std::optional<Expectation>> expected_minima(Family family, int n);
/// Number of ranks the closed forms cover for the family.
int expected_rank_count(Family family);

VerificationReport verify_family(GraphCatalog& catalog, Family family, int n);
std::vector<VerificationReport> verify_trees(GraphCatalog& catalog, int n_min, int n_max);
std::vector<VerificationReport> verify_unicyclic(GraphCatalog& catalog, int n_min, int n_max);
/// Per n: InfinityL1, InfinityL2plus, Theta, then the whole bicyclic family.
std::vector<VerificationReport> verify_bicyclic(GraphCatalog& catalog, int n_min, int n_max);

struct BoundsReport {
    int n = 0;
    long connected_checked = 0;
    long nonregular_checked = 0;
    long cubic_bound_violations = 0;   // 12 irr_t <= 2n^3 - 3n^2 - 2n + 3
    long ratio_bound_violations = 0;   // 4 irr_t <= n^2 irr
    long trees_checked = 0;
    long tree_bound_violations = 0;    // irr_t <= (n-1)(n-2)
    long tree_ratio_violations = 0;    // irr_t <= (n-2) irr, n >= 3
    long tree_max = 0;
    long tree_max_count = 0;
    bool star_is_unique_max = false;
    bool connected_covered = false;    // n within the connected enumeration limit

    bool passed() const;
};

long cubic_bound_numerator(long n);

/// Checks every connected graph (n <= 9) and every tree (n <= 12) at each n.
std::vector<BoundsReport> verify_bounds(GraphCatalog& catalog, int n_min, int n_max);

enum class SearchMode { sequence, graph };
std::string to_string(SearchMode m);

inline constexpr int kMaxConjectureSequenceOrder = 16;

struct Counterexample {
    int n = 0;
    DegreeSequence sequence;
    std::optional<Graph> witness;
    long value = 0;
    long bound = 0;
};

struct ConjectureLevel {
    int n = 0;
    std::optional<long> min_nonregular;        // absent when no non-regular member exists
    std::vector<DegreeSequence> minimizers;    // lexicographically decreasing
    long violations = 0;                       // sequences (or graphs) below 2n - 4
};

struct ConjectureResult {
    SearchMode mode = SearchMode::sequence;
    std::vector<ConjectureLevel> levels;
    std::optional<Counterexample> first;  // by n, then decreasing sequence, then canonical code
};

/// Searches non-regular connected graphs (or connected-realizable non-constant
/// sequences) for irr_t < 2n - 4.
ConjectureResult check_conjecture(GraphCatalog& catalog, int n_min, int n_max, SearchMode mode);

}  // namespace irrt
