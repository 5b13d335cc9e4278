#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "irrt/graph.hpp"

namespace irrt {

enum class Graphicality { graphical, not_graphical, odd_sum };

/// Erdős–Gallai test. Odd degree sums are reported separately.
Graphicality graphicality(const DegreeSequence& d);
bool is_graphical(const DegreeSequence& d);

/// Graphical, no isolated vertex and at least n - 1 edges; (0) counts as
/// the single-vertex graph.
bool has_connected_realization(const DegreeSequence& d);

/// Havel–Hakimi realization followed by 2-switch repairs that merge
/// components. Vertex i receives degree d[i]. Throws std::invalid_argument
/// when no connected realization exists.
Graph realize_connected(const DegreeSequence& d);

struct SequenceFamilyConstraint {
    int n = 0;
    std::optional<int> m;  // edge count; any even degree sum when absent
    int min_degree = 1;
    bool require_connected_realizable = false;
    bool require_graphical = false;
    std::vector<DegreeSequence> forbidden;
};

/// Calls `visit` on every non-increasing sequence of length n with entries in
/// [min_degree, n - 1] matching the constraint, in lexicographically
/// decreasing order. When `max_irr_t` is set, only sequences with
/// irr_t_of_sequence <= *max_irr_t are produced (prefixes are pruned with an
/// admissible lower bound).
void for_each_sequence(const SequenceFamilyConstraint& c, const std::function<void(const DegreeSequence&)>& visit,
                       std::optional<long> max_irr_t = std::nullopt);

std::vector<DegreeSequence> enumerate_sequences(const SequenceFamilyConstraint& c,
                                                std::optional<long> max_irr_t = std::nullopt);

}  // namespace irrt
