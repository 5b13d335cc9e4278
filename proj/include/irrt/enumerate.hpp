#pragma once

#include <map>
#include <utility>
#include <vector>

#include "irrt/canonical.hpp"
#include "irrt/graph.hpp"

namespace irrt {

inline constexpr int kMaxTreeOrder = 12;
inline constexpr int kMaxSparseOrder = 11;     // m in {n-1, n, n+1}
inline constexpr int kMaxConnectedOrder = 9;   // unrestricted m

/// Level sequences of all non-isomorphic free trees on n vertices
/// (Wright–Richmond–Odlyzko–McKay successor rule).
std::vector<std::vector<int>> free_tree_level_sequences(int n);
Graph tree_from_level_sequence(const std::vector<int>& levels);

/// Memoised isomorph-free families. Every list holds canonical
/// representatives (CanonicalCode::to_graph) sorted by canonical code, so the
/// contents do not depend on the worker count. Not safe for concurrent use;
/// the returned references stay valid for the catalog's lifetime.
class GraphCatalog {
public:
    explicit GraphCatalog(unsigned threads = 0);

    unsigned threads() const { return threads_; }

    const std::vector<Graph>& trees(int n);
    /// Connected graphs with exactly m edges: n <= 11 when m is n-1, n or n+1
    /// (edge augmentation of the tree list), otherwise n <= 9.
    const std::vector<Graph>& connected(int n, int m);
    /// All connected graphs on n <= 9 vertices (vertex augmentation).
    const std::vector<Graph>& connected_all(int n);

private:
    unsigned threads_;
    std::map<int, std::vector<Graph>> trees_;
    std::map<std::pair<int, int>, std::vector<Graph>> sparse_;
    std::map<int, std::vector<Graph>> all_;
    std::map<std::pair<int, int>, std::vector<Graph>> dense_;
};

std::vector<Graph> enumerate_trees(int n);
std::vector<Graph> enumerate_connected(int n, int m, unsigned threads = 0);
std::vector<Graph> enumerate_connected_all(int n, unsigned threads = 0);
std::vector<std::pair<Graph, GraphClass>> enumerate_bicyclic_by_class(int n, unsigned threads = 0);
std::vector<std::pair<Graph, GraphClass>> enumerate_bicyclic_by_class(GraphCatalog& catalog, int n);

}  // namespace irrt
