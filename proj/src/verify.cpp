#include "irrt/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "irrt/canonical.hpp"
#include "irrt/error.hpp"
#include "irrt/sequences.hpp"

namespace irrt {

std::string to_string(Family f) {
    switch (f) {
        case Family::tree: return "Tree";
        case Family::unicyclic: return "Unicyclic";
        case Family::bicyclic_all: return "BicyclicAll";
        case Family::bicyclic_infinity_l1: return "BicyclicInfinityL1";
        case Family::bicyclic_infinity_l2plus: return "BicyclicInfinityL2plus";
        case Family::bicyclic_theta: return "BicyclicTheta";
        case Family::connected_all: return "ConnectedAll";
    }
    return "Tree";
}

std::optional<Family> family_from_string(const std::string& name) {
    static const std::map<std::string, Family> names = {
        {"tree", Family::tree},
        {"Tree", Family::tree},
        {"unicyclic", Family::unicyclic},
        {"Unicyclic", Family::unicyclic},
        {"bicyclic-all", Family::bicyclic_all},
        {"BicyclicAll", Family::bicyclic_all},
        {"bplus", Family::bicyclic_infinity_l1},
        {"BicyclicInfinityL1", Family::bicyclic_infinity_l1},
        {"bplusplus", Family::bicyclic_infinity_l2plus},
        {"BicyclicInfinityL2plus", Family::bicyclic_infinity_l2plus},
        {"theta", Family::bicyclic_theta},
        {"BicyclicTheta", Family::bicyclic_theta},
        {"connected", Family::connected_all},
        {"ConnectedAll", Family::connected_all},
    };
    auto it = names.find(name);
    if (it == names.end()) return std::nullopt;
    return it->second;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::informational: return "informational";
    }
    return "informational";
}

std::string to_string(SearchMode m) { return m == SearchMode::sequence ? "sequence" : "graph"; }

bool KMinimal::levels_agree() const {
    if (!sequence_level) return true;
    if (sequence_level->size() != graph_level.size()) return false;
    for (std::size_t i = 0; i < graph_level.size(); ++i) {
        if (!graph_level[i].same_minimum((*sequence_level)[i])) return false;
    }
    return true;
}

namespace {

using SequenceSet = std::set<DegreeSequence, std::greater<>>;

struct Bucket {
    SequenceSet sequences;
    long count = 0;
    std::optional<Graph> witness;
};

std::vector<RankedValue> take_smallest(const std::map<long, Bucket>& buckets, int k) {
    std::vector<RankedValue> out;
    for (const auto& [value, b] : buckets) {
        if (static_cast<int>(out.size()) == k) break;
        out.push_back(RankedValue{value, {b.sequences.begin(), b.sequences.end()}, b.count, b.witness});
    }
    return out;
}

std::optional<GraphKind> subclass_kind(Family f) {
    switch (f) {
        case Family::bicyclic_infinity_l1: return GraphKind::bicyclic_infinity_l1;
        case Family::bicyclic_infinity_l2plus: return GraphKind::bicyclic_infinity_l2plus;
        case Family::bicyclic_theta: return GraphKind::bicyclic_theta;
        default: return std::nullopt;
    }
}

std::optional<int> edge_count_of(Family f, int n) {
    switch (f) {
        case Family::tree: return n - 1;
        case Family::unicyclic: return n;
        case Family::connected_all: return std::nullopt;
        default: return n + 1;
    }
}

bool sequence_level_sound(Family f) {
    return f == Family::tree || f == Family::unicyclic || f == Family::bicyclic_all || f == Family::connected_all;
}

void for_each_member(GraphCatalog& catalog, Family family, int n, const std::function<void(const Graph&)>& visit) {
    switch (family) {
        case Family::tree:
            for (const auto& g : catalog.trees(n)) visit(g);
            return;
        case Family::connected_all:
            for (const auto& g : catalog.connected_all(n)) visit(g);
            return;
        case Family::unicyclic:
            for (const auto& g : catalog.connected(n, n)) visit(g);
            return;
        default: break;
    }
    const auto kind = subclass_kind(family);
    for (const auto& g : catalog.connected(n, n + 1)) {
        if (!kind || classify(g).kind == *kind) visit(g);
    }
}

}  // namespace

std::vector<RankedValue> k_minimal_sequences(int n, std::optional<int> m, int k) {
    std::map<long, Bucket> buckets;
    SequenceFamilyConstraint c;
    c.n = n;
    c.m = m;
    c.min_degree = n == 1 ? 0 : 1;
    c.require_connected_realizable = true;
    for_each_sequence(c, [&](const DegreeSequence& d) { buckets[irr_t_of_sequence(d)].sequences.insert(d); });
    return take_smallest(buckets, k);
}

KMinimal k_minimal(GraphCatalog& catalog, Family family, int n, int k) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    std::map<long, Bucket> buckets;
    for_each_member(catalog, family, n, [&](const Graph& g) {
        auto& b = buckets[total_irregularity(g)];
        b.sequences.insert(degree_sequence(g));
        if (b.count++ == 0) b.witness = g;
    });
    KMinimal out;
    out.graph_level = take_smallest(buckets, k);
    if (sequence_level_sound(family)) {
        auto seq = k_minimal_sequences(n, edge_count_of(family, n), k);
        for (auto& r : seq) r.graph_count = 0;
        out.sequence_level = std::move(seq);
    }
    return out;
}

int expected_rank_count(Family family) {
    switch (family) {
        case Family::tree:
        case Family::unicyclic:
        case Family::bicyclic_all: return 3;
        case Family::connected_all: return 1;
        default: return 2;
    }
}

std::vector<std::optional<Expectation>> expected_minima(Family family, int n) {
    struct Rule {
        int min_n;
        long value;
        std::vector<std::pair<int, int>> runs;
    };
    auto build = [&](std::initializer_list<Rule> rules) {
        std::vector<std::optional<Expectation>> out;
        for (const auto& r : rules) {
            if (n < r.min_n) {
                out.emplace_back();
            } else {
                out.emplace_back(Expectation{r.value, {DegreeSequence::from_runs(r.runs)}});
            }
        }
        return out;
    };
    const long ln = n;
    switch (family) {
        case Family::tree:
            return build({{2, 2 * ln - 4, {{2, n - 2}, {1, 2}}},
                          {5, 4 * ln - 10, {{3, 1}, {2, n - 4}, {1, 3}}},
                          {6, 6 * ln - 20, {{3, 2}, {2, n - 6}, {1, 4}}}});
        case Family::unicyclic:
            return build({{3, 0, {{2, n}}},
                          {4, 2 * ln - 2, {{3, 1}, {2, n - 2}, {1, 1}}},
                          {5, 4 * ln - 8, {{3, 2}, {2, n - 4}, {1, 2}}}});
        case Family::bicyclic_infinity_l1:
            return build({{6, 2 * ln - 2, {{4, 1}, {2, n - 1}}},
                          {6, 4 * ln - 6, {{4, 1}, {3, 1}, {2, n - 3}, {1, 1}}}});
        case Family::bicyclic_infinity_l2plus:
            return build({{7, 2 * ln - 4, {{3, 2}, {2, n - 2}}},
                          {7, 4 * ln - 10, {{3, 3}, {2, n - 4}, {1, 1}}}});
        case Family::bicyclic_theta:
            return build({{5, 2 * ln - 4, {{3, 2}, {2, n - 2}}},
                          {5, 4 * ln - 10, {{3, 3}, {2, n - 4}, {1, 1}}}});
        case Family::bicyclic_all:
            return build({{7, 2 * ln - 4, {{3, 2}, {2, n - 2}}},
                          {7, 2 * ln - 2, {{4, 1}, {2, n - 1}}},
                          {7, 4 * ln - 10, {{3, 3}, {2, n - 4}, {1, 1}}}});
        case Family::connected_all: {
            // Minimum zero, attained exactly by the regular sequences.
            Expectation e{0, {}};
            for (int deg = n - 1; deg >= 0; --deg) {
                DegreeSequence d(std::vector<int>(static_cast<std::size_t>(n), deg));
                if (has_connected_realization(d)) e.sequences.push_back(d);
            }
            return {e};
        }
    }
    return {};
}

bool VerificationReport::passed() const {
    return std::none_of(verdict.begin(), verdict.end(), [](Verdict v) { return v == Verdict::fail; });
}

VerificationReport verify_family(GraphCatalog& catalog, Family family, int n) {
    const int k = expected_rank_count(family);
    const KMinimal km = k_minimal(catalog, family, n, k);

    VerificationReport report;
    report.family = family;
    report.n = n;
    report.ranks = km.graph_level;
    report.expected = expected_minima(family, n);

    for (int i = 0; i < k; ++i) {
        const auto& exp = report.expected[static_cast<std::size_t>(i)];
        if (!exp) {
            report.verdict.push_back(Verdict::informational);
            continue;
        }
        bool ok = i < static_cast<int>(report.ranks.size());
        if (ok) {
            const auto& got = report.ranks[static_cast<std::size_t>(i)];
            ok = got.value == exp->value && got.sequences == exp->sequences;
            if (ok && km.sequence_level) {
                ok = i < static_cast<int>(km.sequence_level->size()) &&
                     (*km.sequence_level)[static_cast<std::size_t>(i)].same_minimum(got);
            }
            // Rank one is a single graph up to isomorphism for trees and unicyclic graphs.
            if (ok && i == 0 && family == Family::tree) {
                ok = got.graph_count == 1 && are_isomorphic(*got.witness, make_path(n));
            }
            if (ok && i == 0 && family == Family::unicyclic) {
                ok = got.graph_count == 1 && are_isomorphic(*got.witness, make_cycle(n));
            }
        }
        report.verdict.push_back(ok ? Verdict::pass : Verdict::fail);
    }
    return report;
}

std::vector<VerificationReport> verify_trees(GraphCatalog& catalog, int n_min, int n_max) {
    std::vector<VerificationReport> out;
    for (int n = n_min; n <= n_max; ++n) out.push_back(verify_family(catalog, Family::tree, n));
    return out;
}

std::vector<VerificationReport> verify_unicyclic(GraphCatalog& catalog, int n_min, int n_max) {
    std::vector<VerificationReport> out;
    for (int n = n_min; n <= n_max; ++n) out.push_back(verify_family(catalog, Family::unicyclic, n));
    return out;
}

std::vector<VerificationReport> verify_bicyclic(GraphCatalog& catalog, int n_min, int n_max) {
    std::vector<VerificationReport> out;
    for (int n = n_min; n <= n_max; ++n) {
        for (Family f : {Family::bicyclic_infinity_l1, Family::bicyclic_infinity_l2plus, Family::bicyclic_theta,
                         Family::bicyclic_all}) {
            out.push_back(verify_family(catalog, f, n));
        }
    }
    return out;
}

long cubic_bound_numerator(long n) { return 2 * n * n * n - 3 * n * n - 2 * n + 3; }

bool BoundsReport::passed() const {
    return cubic_bound_violations == 0 && ratio_bound_violations == 0 && tree_bound_violations == 0 &&
           tree_ratio_violations == 0 && (trees_checked == 0 || star_is_unique_max);
}

std::vector<BoundsReport> verify_bounds(GraphCatalog& catalog, int n_min, int n_max) {
    if (n_min < 1 || n_max > kMaxTreeOrder) throw LimitError("bounds checks support 1 <= n <= 12");
    std::vector<BoundsReport> out;
    for (int n = n_min; n <= n_max; ++n) {
        BoundsReport r;
        r.n = n;
        const long ln = n;
        if (n <= kMaxConnectedOrder) {
            r.connected_covered = true;
            for (const auto& g : catalog.connected_all(n)) {
                const long t = total_irregularity(g);
                const long e = edge_irregularity(g);
                ++r.connected_checked;
                if (12 * t > cubic_bound_numerator(ln)) ++r.cubic_bound_violations;
                if (!is_regular(g)) ++r.nonregular_checked;
                if (4 * t > ln * ln * e) ++r.ratio_bound_violations;
            }
        }
        const long tree_cap = (ln - 1) * (ln - 2);
        std::optional<Graph> top;
        for (const auto& t : catalog.trees(n)) {
            const long value = total_irregularity(t);
            ++r.trees_checked;
            if (value > tree_cap) ++r.tree_bound_violations;
            if (n >= 3 && value > (ln - 2) * edge_irregularity(t)) ++r.tree_ratio_violations;
            if (!top || value > r.tree_max) {
                r.tree_max = value;
                r.tree_max_count = 1;
                top = t;
            } else if (value == r.tree_max) {
                ++r.tree_max_count;
            }
        }
        r.star_is_unique_max = r.tree_max == tree_cap && r.tree_max_count == 1 && are_isomorphic(*top, make_star(n));
        out.push_back(r);
    }
    return out;
}

namespace {

struct LevelScan {
    ConjectureLevel level;
    SequenceSet minimizers;
    std::optional<Counterexample> first;

    void offer(const DegreeSequence& d, long value, const Graph* witness) {
        const long bound = 2L * level.n - 4;
        if (!level.min_nonregular || value < *level.min_nonregular) {
            level.min_nonregular = value;
            minimizers.clear();
        }
        if (value == *level.min_nonregular) minimizers.insert(d);
        if (value < bound) {
            ++level.violations;
            // Keep the lexicographically largest sequence; the first graph seen wins ties.
            if (!first || d > first->sequence) {
                first = Counterexample{level.n, d, witness ? std::optional<Graph>(*witness) : std::nullopt, value, bound};
            }
        }
    }

    ConjectureLevel finish() {
        level.minimizers.assign(minimizers.begin(), minimizers.end());
        return level;
    }
};

void scan_sequences(LevelScan& scan, std::optional<long> cap) {
    SequenceFamilyConstraint c;
    c.n = scan.level.n;
    c.min_degree = 1;
    c.require_connected_realizable = true;
    for_each_sequence(
        c,
        [&](const DegreeSequence& d) {
            if (!d.is_constant()) scan.offer(d, irr_t_of_sequence(d), nullptr);
        },
        cap);
}

}  // namespace

ConjectureResult check_conjecture(GraphCatalog& catalog, int n_min, int n_max, SearchMode mode) {
    const int limit = mode == SearchMode::sequence ? kMaxConjectureSequenceOrder : kMaxConnectedOrder;
    if (n_min < 1 || n_max > limit) {
        throw LimitError(to_string(mode) + "-mode conjecture search supports 1 <= n <= " + std::to_string(limit));
    }
    ConjectureResult result;
    result.mode = mode;
    for (int n = n_min; n <= n_max; ++n) {
        LevelScan scan;
        scan.level.n = n;
        if (mode == SearchMode::sequence) {
            // Every sequence below or at 2n - 4 survives the pruning, which covers
            // both the violators and the minimum (the path attains 2n - 4).
            scan_sequences(scan, std::max(2L * n - 4, 0L));
            if (!scan.level.min_nonregular) scan_sequences(scan, std::nullopt);
            if (scan.first) scan.first->witness = realize_connected(scan.first->sequence);
        } else {
            for (const auto& g : catalog.connected_all(n)) {
                if (is_regular(g)) continue;
                scan.offer(degree_sequence(g), total_irregularity(g), &g);
            }
        }
        if (!result.first && scan.first) result.first = scan.first;
        result.levels.push_back(scan.finish());
    }
    return result;
}

}  // namespace irrt
