#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "irrt/graph.hpp"

namespace irrt {

inline constexpr int kMaxCanonicalOrder = 12;

/// Adjacency rows of the canonically relabelled graph. Equal codes exactly
/// when the graphs are isomorphic.
struct CanonicalCode {
    int order = 0;
    std::array<std::uint16_t, kMaxCanonicalOrder> rows{};

    Graph to_graph() const;
    auto operator<=>(const CanonicalCode&) const = default;
};

struct CanonicalCodeHash {
    std::size_t operator()(const CanonicalCode& c) const noexcept;
};

struct CanonicalLabeling {
    CanonicalCode code;
    std::vector<int> label;  // vertex -> canonical position
};

/// Individualization-refinement search over equitable partitions, taking the
/// smallest leaf certificate and pruning with discovered automorphisms.
/// Throws LimitError above kMaxCanonicalOrder vertices.
CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalCode canonical_form(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace irrt
