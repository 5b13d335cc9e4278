#include "irrt/transform.hpp"

#include <algorithm>
#include <bit>

namespace irrt {

namespace {

Vertex lowest(VertexSet s) { return std::countr_zero(s); }

VertexSet pendants(const Graph& g) {
    VertexSet out = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 1) out |= bit(v);
    }
    return out;
}

void require_vertex(const Graph& g, Vertex v) {
    if (!g.contains(v)) {
        throw TransformError(TransformErrorKind::invalid_vertex, "vertex " + std::to_string(v) + " is not in the graph");
    }
}

void require_connected(const Graph& g) {
    if (!is_connected(g)) throw TransformError(TransformErrorKind::not_connected, "graph is not connected");
}

int edges_within(const Graph& g, VertexSet s) {
    int twice = 0;
    for (VertexSet rest = s; rest; rest &= rest - 1) twice += std::popcount(g.neighbors(lowest(rest)) & s);
    return twice / 2;
}

std::vector<HangingTree> hanging_trees_unchecked(const Graph& g, Vertex u) {
    std::vector<HangingTree> trees;
    for (VertexSet nb = g.neighbors(u); nb; nb &= nb - 1) {
        const Vertex w = lowest(nb);
        const VertexSet side = component_of(g, w, bit(u));
        // uw is a bridge iff w is the only neighbour of u on its side.
        if ((side & g.neighbors(u)) != bit(w)) continue;
        if (edges_within(g, side) != std::popcount(side) - 1) continue;
        trees.push_back(HangingTree{u, w, side});
    }
    return trees;
}

long r_at(const Graph& g, Vertex u) {
    const int du = g.degree(u);
    return std::count_if(g.degrees().begin(), g.degrees().end(), [&](int d) { return d >= 2 && d < du; });
}

Graph move_unchecked(const Graph& g, Vertex v, const HangingTree& tree) {
    return g.without_edge(tree.root_attachment, tree.attach).with_edge(v, tree.attach);
}

}  // namespace

int HangingTree::size() const { return std::popcount(vertices); }

std::string to_string(TransformErrorKind kind) {
    switch (kind) {
        case TransformErrorKind::invalid_vertex: return "invalid-vertex";
        case TransformErrorKind::not_connected: return "not-connected";
        case TransformErrorKind::too_few_pendants: return "too-few-pendants";
        case TransformErrorKind::degree_too_small: return "degree-too-small";
        case TransformErrorKind::target_not_pendant: return "target-not-pendant";
        case TransformErrorKind::target_inside_subtree: return "target-inside-subtree";
        case TransformErrorKind::not_a_hanging_tree: return "not-a-hanging-tree";
    }
    return "unknown";
}

std::vector<HangingTree> hanging_trees_at(const Graph& g, Vertex u) {
    require_vertex(g, u);
    require_connected(g);
    return hanging_trees_unchecked(g, u);
}

Graph branch_transform(const Graph& g, Vertex u, Vertex v, const HangingTree& tree) {
    require_vertex(g, u);
    require_vertex(g, v);
    require_connected(g);
    if (std::popcount(pendants(g)) < 2) {
        throw TransformError(TransformErrorKind::too_few_pendants, "graph has fewer than two pendant vertices");
    }
    if (g.degree(u) < 3) {
        throw TransformError(TransformErrorKind::degree_too_small,
                             "source vertex " + std::to_string(u) + " has degree below 3");
    }
    if (g.degree(v) != 1) {
        throw TransformError(TransformErrorKind::target_not_pendant,
                             "target vertex " + std::to_string(v) + " is not pendant");
    }
    if (tree.contains(v)) {
        throw TransformError(TransformErrorKind::target_inside_subtree,
                             "target vertex " + std::to_string(v) + " lies in the moved tree");
    }
    const auto trees = hanging_trees_unchecked(g, u);
    if (tree.root_attachment != u || std::find(trees.begin(), trees.end(), tree) == trees.end()) {
        throw TransformError(TransformErrorKind::not_a_hanging_tree,
                             "tree is not a maximal hanging tree at vertex " + std::to_string(u));
    }
    return move_unchecked(g, v, tree);
}

long predicted_delta(const Graph& g, Vertex u) {
    require_vertex(g, u);
    if (g.degree(u) < 3) {
        throw TransformError(TransformErrorKind::degree_too_small,
                             "source vertex " + std::to_string(u) + " has degree below 3");
    }
    return -2 * (r_at(g, u) + 1);
}

std::vector<BranchMove> valid_moves(const Graph& g) {
    std::vector<BranchMove> moves;
    if (!is_connected(g)) return moves;
    const VertexSet leaves = pendants(g);
    if (std::popcount(leaves) < 2) return moves;
    for (Vertex u = 0; u < g.order(); ++u) {
        if (g.degree(u) < 3) continue;
        for (const auto& tree : hanging_trees_unchecked(g, u)) {
            for (VertexSet rest = leaves & ~tree.vertices; rest; rest &= rest - 1) {
                moves.push_back(BranchMove{u, lowest(rest), tree});
            }
        }
    }
    return moves;
}

std::optional<BranchMove> select_move(const Graph& g) {
    if (!is_connected(g)) return std::nullopt;
    const VertexSet leaves = pendants(g);
    if (std::popcount(leaves) < 2) return std::nullopt;

    std::vector<Vertex> sources;
    for (Vertex u = 0; u < g.order(); ++u) {
        if (g.degree(u) >= 3) sources.push_back(u);
    }
    std::stable_sort(sources.begin(), sources.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

    for (Vertex u : sources) {
        auto trees = hanging_trees_unchecked(g, u);
        std::stable_sort(trees.begin(), trees.end(),
                         [](const HangingTree& a, const HangingTree& b) { return a.size() < b.size(); });
        for (const auto& tree : trees) {
            const VertexSet outside = leaves & ~tree.vertices;
            if (outside) return BranchMove{u, lowest(outside), tree};
        }
    }
    return std::nullopt;
}

Reduction reduce_to_minimum(const Graph& g) {
    require_connected(g);
    Reduction out{g, {}};
    long current = total_irregularity(g);
    while (auto move = select_move(out.result)) {
        const long predicted = -2 * (r_at(out.result, move->source) + 1);
        out.result = move_unchecked(out.result, move->target, move->moved);
        const long next = total_irregularity(out.result);
        out.steps.push_back(TransformStep{move->source, move->target, move->moved, next - current, predicted});
        current = next;
    }
    return out;
}

}  // namespace irrt
