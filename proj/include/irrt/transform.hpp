#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "irrt/graph.hpp"

namespace irrt {

/// Induced subtree joined to the rest of the host by a single bridge edge
/// (root_attachment, attach). Always maximal: it is the whole component of
/// `attach` once the bridge is removed.
struct HangingTree {
    Vertex root_attachment = -1;
    Vertex attach = -1;
    VertexSet vertices = 0;

    Edge bridge_edge() const { return {root_attachment, attach}; }
    int size() const;
    bool contains(Vertex v) const { return (vertices & bit(v)) != 0; }
    bool operator==(const HangingTree&) const = default;
};

enum class TransformErrorKind {
    invalid_vertex,
    not_connected,
    too_few_pendants,
    degree_too_small,
    target_not_pendant,
    target_inside_subtree,
    not_a_hanging_tree,
};

std::string to_string(TransformErrorKind kind);

class TransformError : public std::invalid_argument {
public:
    TransformError(TransformErrorKind kind, const std::string& what)
        : std::invalid_argument(what), kind_(kind) {}
    TransformErrorKind kind() const { return kind_; }

private:
    TransformErrorKind kind_;
};

/// Every maximal hanging tree whose bridge edge is incident to u, ordered by
/// the tree-side endpoint of the bridge.
std::vector<HangingTree> hanging_trees_at(const Graph& g, Vertex u);

/// Detaches `tree` from u and reattaches it at the pendant vertex v.
Graph branch_transform(const Graph& g, Vertex u, Vertex v, const HangingTree& tree);

/// -2(r + 1), r counting vertices w with 2 <= d(w) < d(u).
long predicted_delta(const Graph& g, Vertex u);

struct BranchMove {
    Vertex source = -1;
    Vertex target = -1;
    HangingTree moved;
};

/// All valid (u, v, T) triples, ordered by (u, T.attach, v).
std::vector<BranchMove> valid_moves(const Graph& g);

struct TransformStep {
    Vertex source = -1;
    Vertex target = -1;
    HangingTree moved;
    long delta = 0;      // measured change of total irregularity
    long predicted = 0;  // -2(r + 1) from the pre-step degrees
};

struct Reduction {
    Graph result;
    std::vector<TransformStep> steps;
};

/// The move reduce_to_minimum would apply next: u of largest degree (lowest
/// index on ties), then the smallest hanging tree at u (lowest attach vertex
/// on ties), then the lowest-index pendant outside that tree.
std::optional<BranchMove> select_move(const Graph& g);

/// Applies select_move until no valid move remains.
Reduction reduce_to_minimum(const Graph& g);

}  // namespace irrt
