#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace irrt {

using Vertex = int;
using VertexSet = std::uint64_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr int kMaxOrder = 64;

inline constexpr VertexSet bit(Vertex v) { return VertexSet{1} << v; }

/// Simple undirected graph on vertices 0..n-1, stored as one adjacency
/// bitset per vertex. Degrees are cached. Values are immutable once built;
/// the `with_*` members return modified copies.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);
    Graph(int order, std::span<const Edge> edges);
    Graph(int order, std::initializer_list<Edge> edges);

    /// Builds from adjacency rows; rejects loops, asymmetric rows and
    /// out-of-range bits.
    static Graph from_rows(std::span<const VertexSet> rows);

    int order() const { return static_cast<int>(rows_.size()); }
    int size() const { return edge_count_; }

    int degree(Vertex v) const { return degrees_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& degrees() const { return degrees_; }
    VertexSet neighbors(Vertex v) const { return rows_[static_cast<std::size_t>(v)]; }
    std::span<const VertexSet> rows() const { return rows_; }
    bool has_edge(Vertex u, Vertex v) const { return (rows_[static_cast<std::size_t>(u)] & bit(v)) != 0; }
    bool contains(Vertex v) const { return v >= 0 && v < order(); }
    VertexSet all_vertices() const;

    /// Edges as (i, j) with i < j, sorted.
    std::vector<Edge> edges() const;

    Graph with_edge(Vertex u, Vertex v) const;
    Graph without_edge(Vertex u, Vertex v) const;
    /// Appends a new vertex adjacent to every vertex in `neighbours`.
    Graph with_vertex(VertexSet neighbours) const;
    /// Induced subgraph on `keep`, relabelled in increasing vertex order.
    Graph induced(VertexSet keep) const;
    /// Relabels vertex v as perm[v].
    Graph relabeled(std::span<const int> perm) const;

    bool operator==(const Graph& other) const { return rows_ == other.rows_; }

private:
    void add_edge_unchecked(Vertex u, Vertex v);
    void remove_edge_unchecked(Vertex u, Vertex v);
    void check_vertex(Vertex v) const;

    std::vector<VertexSet> rows_;
    std::vector<int> degrees_;
    int edge_count_ = 0;
};

Graph make_path(int n);
Graph make_cycle(int n);
/// Star K_{1,n-1} with centre 0.
Graph make_star(int n);

/// Non-increasing sequence of non-negative integers.
class DegreeSequence {
public:
    DegreeSequence() = default;
    /// Throws std::invalid_argument unless `degrees` is non-increasing and
    /// non-negative.
    explicit DegreeSequence(std::vector<int> degrees);
    DegreeSequence(std::initializer_list<int> degrees);
    static DegreeSequence from_unsorted(std::vector<int> degrees);

    /// Sequence built from (value, multiplicity) runs, e.g. {{3,1},{2,4},{1,3}};
    /// runs with non-positive multiplicity are skipped.
    static DegreeSequence from_runs(const std::vector<std::pair<int, int>>& runs);

    std::size_t size() const { return degrees_.size(); }
    bool empty() const { return degrees_.empty(); }
    int operator[](std::size_t i) const { return degrees_[i]; }
    const std::vector<int>& values() const { return degrees_; }
    auto begin() const { return degrees_.begin(); }
    auto end() const { return degrees_.end(); }

    long sum() const;
    bool is_constant() const;

    /// "(3,2,2,1)".
    std::string to_string() const;
    /// Run-length form, e.g. "(3,2^4,1^3)".
    std::string to_compact_string() const;

    auto operator<=>(const DegreeSequence&) const = default;

private:
    std::vector<int> degrees_;
};

DegreeSequence degree_sequence(const Graph& g);

/// Half the sum of |d(u) - d(v)| over ordered vertex pairs, computed pairwise.
long total_irregularity(const Graph& g);

/// Sum of |d(u) - d(v)| over the edges uv.
long edge_irregularity(const Graph& g);

/// Sorted closed form sum_i (n + 1 - 2i) d_i over a non-increasing sequence.
long irr_t_of_sequence(const DegreeSequence& d);
/// Same, over raw values; throws std::invalid_argument when not non-increasing.
long irr_t_of_sequence(std::span<const int> d);

struct DegreeProfile {
    int s = 0;           // vertices of degree >= 3
    int h = 0;           // pendant vertices
    int t = 0;           // vertices of maximum degree
    int max_degree = 0;
    std::optional<int> r;  // 2 <= degree < u_degree, when a reference degree is given
};

/// Throws std::invalid_argument when u_degree is given and below 3.
DegreeProfile degree_profile(const DegreeSequence& d, std::optional<int> u_degree = std::nullopt);

bool is_connected(const Graph& g);
bool is_regular(const Graph& g);
/// Connected, at least three vertices, and no cut vertex.
bool is_biconnected(const Graph& g);
/// Vertex set reached from `start`, not entering `blocked`.
VertexSet component_of(const Graph& g, Vertex start, VertexSet blocked = 0);

/// Vertices surviving iterated deletion of degree <= 1 vertices.
VertexSet two_core_vertices(const Graph& g);
/// The 2-core as a graph, relabelled in increasing original vertex order.
Graph two_core(const Graph& g);

enum class GraphKind {
    tree,
    unicyclic,
    bicyclic_infinity_l1,
    bicyclic_infinity_l2plus,
    bicyclic_theta,
    other,
};

struct CycleParameters {
    int p = 0;
    int q = 0;
    int l = 0;
    auto operator<=>(const CycleParameters&) const = default;
};

struct GraphClass {
    GraphKind kind = GraphKind::other;
    bool connected = true;
    std::optional<CycleParameters> shape;  // bicyclic kinds only

    bool is_bicyclic() const;
    bool operator==(const GraphClass&) const = default;
};

std::string to_string(GraphKind kind);

GraphClass classify(const Graph& g);

/// Two cycles C_p, C_q joined through a path on l vertices (identified when l = 1).
Graph make_infinity(int p, int q, int l);
/// Two cycles C_p, C_q sharing a path on l vertices.
Graph make_theta(int p, int q, int l);

}  // namespace irrt
