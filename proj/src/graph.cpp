#include "irrt/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "irrt/error.hpp"

namespace irrt {

namespace {

int popcount(VertexSet s) { return std::popcount(s); }
Vertex lowest(VertexSet s) { return std::countr_zero(s); }

VertexSet prefix_mask(int n) { return n >= kMaxOrder ? ~VertexSet{0} : bit(n) - 1; }

}  // namespace

Graph::Graph(int order) {
    if (order < 0 || order > kMaxOrder) {
        throw LimitError("graph order " + std::to_string(order) + " outside [0, 64]");
    }
    rows_.assign(static_cast<std::size_t>(order), 0);
    degrees_.assign(static_cast<std::size_t>(order), 0);
}

Graph::Graph(int order, std::span<const Edge> edges) : Graph(order) {
    for (auto [u, v] : edges) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (has_edge(u, v)) {
            throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
        }
        add_edge_unchecked(u, v);
    }
}

Graph::Graph(int order, std::initializer_list<Edge> edges)
    : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

Graph Graph::from_rows(std::span<const VertexSet> rows) {
    Graph g(static_cast<int>(rows.size()));
    const VertexSet valid = prefix_mask(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        const VertexSet row = rows[static_cast<std::size_t>(v)];
        if (row & ~valid) throw std::invalid_argument("adjacency row references a missing vertex");
        if (row & bit(v)) throw std::invalid_argument("self-loop at vertex " + std::to_string(v));
        for (VertexSet rest = row; rest; rest &= rest - 1) {
            if (!(rows[static_cast<std::size_t>(lowest(rest))] & bit(v))) {
                throw std::invalid_argument("adjacency rows are not symmetric");
            }
        }
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        g.rows_[static_cast<std::size_t>(v)] = rows[static_cast<std::size_t>(v)];
        g.degrees_[static_cast<std::size_t>(v)] = popcount(rows[static_cast<std::size_t>(v)]);
        g.edge_count_ += g.degrees_[static_cast<std::size_t>(v)];
    }
    g.edge_count_ /= 2;
    return g;
}

VertexSet Graph::all_vertices() const { return prefix_mask(order()); }

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (Vertex u = 0; u < order(); ++u) {
        for (VertexSet rest = neighbors(u) & ~prefix_mask(u + 1); rest; rest &= rest - 1) {
            out.emplace_back(u, lowest(rest));
        }
    }
    return out;
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v || has_edge(u, v)) {
        throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) + " cannot be added");
    }
    Graph g = *this;
    g.add_edge_unchecked(u, v);
    return g;
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v || !has_edge(u, v)) {
        throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) + " is absent");
    }
    Graph g = *this;
    g.remove_edge_unchecked(u, v);
    return g;
}

Graph Graph::with_vertex(VertexSet neighbours) const {
    if (order() >= kMaxOrder) throw LimitError("graph already has 64 vertices");
    if (neighbours & ~all_vertices()) throw std::invalid_argument("neighbour set references a missing vertex");
    Graph g = *this;
    const Vertex v = order();
    g.rows_.push_back(0);
    g.degrees_.push_back(0);
    for (VertexSet rest = neighbours; rest; rest &= rest - 1) g.add_edge_unchecked(v, lowest(rest));
    return g;
}

Graph Graph::induced(VertexSet keep) const {
    keep &= all_vertices();
    std::vector<int> index(static_cast<std::size_t>(order()), -1);
    int next = 0;
    for (VertexSet rest = keep; rest; rest &= rest - 1) index[static_cast<std::size_t>(lowest(rest))] = next++;
    Graph g(next);
    for (VertexSet rest = keep; rest; rest &= rest - 1) {
        const Vertex u = lowest(rest);
        for (VertexSet nb = neighbors(u) & keep & ~prefix_mask(u + 1); nb; nb &= nb - 1) {
            g.add_edge_unchecked(index[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(lowest(nb))]);
        }
    }
    return g;
}

Graph Graph::relabeled(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != order()) throw std::invalid_argument("permutation size mismatch");
    VertexSet seen = 0;
    for (int p : perm) {
        if (p < 0 || p >= order() || (seen & bit(p))) throw std::invalid_argument("not a permutation");
        seen |= bit(p);
    }
    Graph g(order());
    for (auto [u, v] : edges()) {
        g.add_edge_unchecked(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    }
    return g;
}

void Graph::add_edge_unchecked(Vertex u, Vertex v) {
    rows_[static_cast<std::size_t>(u)] |= bit(v);
    rows_[static_cast<std::size_t>(v)] |= bit(u);
    ++degrees_[static_cast<std::size_t>(u)];
    ++degrees_[static_cast<std::size_t>(v)];
    ++edge_count_;
}

void Graph::remove_edge_unchecked(Vertex u, Vertex v) {
    rows_[static_cast<std::size_t>(u)] &= ~bit(v);
    rows_[static_cast<std::size_t>(v)] &= ~bit(u);
    --degrees_[static_cast<std::size_t>(u)];
    --degrees_[static_cast<std::size_t>(v)];
    --edge_count_;
}

void Graph::check_vertex(Vertex v) const {
    if (!contains(v)) {
        throw std::out_of_range("vertex " + std::to_string(v) + " outside [0, " + std::to_string(order()) + ")");
    }
}

Graph make_path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph make_star(int n) {
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return Graph(n, e);
}

// ---------------------------------------------------------------------------
// DegreeSequence

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
        if (degrees_[i] < 0) throw std::invalid_argument("negative degree in sequence");
        if (i > 0 && degrees_[i] > degrees_[i - 1]) {
            throw std::invalid_argument("degree sequence is not non-increasing at position " + std::to_string(i));
        }
    }
}

DegreeSequence::DegreeSequence(std::initializer_list<int> degrees) : DegreeSequence(std::vector<int>(degrees)) {}

DegreeSequence DegreeSequence::from_unsorted(std::vector<int> degrees) {
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    return DegreeSequence(std::move(degrees));
}

DegreeSequence DegreeSequence::from_runs(const std::vector<std::pair<int, int>>& runs) {
    std::vector<int> d;
    for (auto [value, count] : runs) {
        for (int i = 0; i < count; ++i) d.push_back(value);
    }
    return DegreeSequence(std::move(d));
}

long DegreeSequence::sum() const { return std::accumulate(degrees_.begin(), degrees_.end(), 0L); }

bool DegreeSequence::is_constant() const {
    return degrees_.empty() || degrees_.front() == degrees_.back();
}

std::string DegreeSequence::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < degrees_.size(); ++i) out << (i ? "," : "") << degrees_[i];
    out << ')';
    return out.str();
}

std::string DegreeSequence::to_compact_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < degrees_.size();) {
        std::size_t j = i;
        while (j < degrees_.size() && degrees_[j] == degrees_[i]) ++j;
        out << (i ? "," : "") << degrees_[i];
        if (j - i > 1) out << '^' << (j - i);
        i = j;
    }
    out << ')';
    return out.str();
}

DegreeSequence degree_sequence(const Graph& g) { return DegreeSequence::from_unsorted(g.degrees()); }

// ---------------------------------------------------------------------------
// Irregularity indices

long total_irregularity(const Graph& g) {
    const auto& d = g.degrees();
    long total = 0;
    for (std::size_t u = 0; u < d.size(); ++u) {
        for (std::size_t v = u + 1; v < d.size(); ++v) total += std::abs(d[u] - d[v]);
    }
    return total;
}

long edge_irregularity(const Graph& g) {
    long total = 0;
    for (auto [u, v] : g.edges()) total += std::abs(g.degree(u) - g.degree(v));
    return total;
}

long irr_t_of_sequence(std::span<const int> d) {
    const long n = static_cast<long>(d.size());
    long total = 0;
    for (long i = 0; i < n; ++i) {
        if (i > 0 && d[static_cast<std::size_t>(i)] > d[static_cast<std::size_t>(i - 1)]) {
            throw std::invalid_argument("degree sequence is not non-increasing");
        }
        // 1-indexed coefficient n + 1 - 2i becomes n - 1 - 2i here.
        total += (n - 1 - 2 * i) * d[static_cast<std::size_t>(i)];
    }
    return total;
}

long irr_t_of_sequence(const DegreeSequence& d) { return irr_t_of_sequence(std::span<const int>(d.values())); }

DegreeProfile degree_profile(const DegreeSequence& d, std::optional<int> u_degree) {
    if (u_degree && *u_degree < 3) throw std::invalid_argument("reference degree must be at least 3");
    DegreeProfile p;
    p.max_degree = d.empty() ? 0 : d[0];
    for (int x : d) {
        if (x >= 3) ++p.s;
        if (x == 1) ++p.h;
        if (x == p.max_degree) ++p.t;
    }
    if (u_degree) {
        p.r = static_cast<int>(std::count_if(d.begin(), d.end(), [&](int x) { return x >= 2 && x < *u_degree; }));
    }
    return p;
}

// ---------------------------------------------------------------------------
// Connectivity

VertexSet component_of(const Graph& g, Vertex start, VertexSet blocked) {
    VertexSet seen = bit(start);
    VertexSet frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        for (VertexSet rest = frontier; rest; rest &= rest - 1) next |= g.neighbors(lowest(rest));
        next &= ~seen & ~blocked;
        seen |= next;
        frontier = next;
    }
    return seen;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    return component_of(g, 0) == g.all_vertices();
}

bool is_regular(const Graph& g) {
    const auto& d = g.degrees();
    return std::adjacent_find(d.begin(), d.end(), std::not_equal_to<>()) == d.end();
}

bool is_biconnected(const Graph& g) {
    if (g.order() < 3 || !is_connected(g)) return false;
    for (Vertex cut = 0; cut < g.order(); ++cut) {
        const Vertex start = cut == 0 ? 1 : 0;
        if (component_of(g, start, bit(cut)) != (g.all_vertices() & ~bit(cut))) return false;
    }
    return true;
}

VertexSet two_core_vertices(const Graph& g) {
    VertexSet alive = g.all_vertices();
    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexSet rest = alive; rest; rest &= rest - 1) {
            const Vertex v = lowest(rest);
            if (popcount(g.neighbors(v) & alive) <= 1) {
                alive &= ~bit(v);
                changed = true;
            }
        }
    }
    return alive;
}

Graph two_core(const Graph& g) { return g.induced(two_core_vertices(g)); }

// ---------------------------------------------------------------------------
// Classification

bool GraphClass::is_bicyclic() const {
    return kind == GraphKind::bicyclic_infinity_l1 || kind == GraphKind::bicyclic_infinity_l2plus ||
           kind == GraphKind::bicyclic_theta;
}

std::string to_string(GraphKind kind) {
    switch (kind) {
        case GraphKind::tree: return "Tree";
        case GraphKind::unicyclic: return "Unicyclic";
        case GraphKind::bicyclic_infinity_l1: return "BicyclicInfinityL1";
        case GraphKind::bicyclic_infinity_l2plus: return "BicyclicInfinityL2plus";
        case GraphKind::bicyclic_theta: return "BicyclicTheta";
        case GraphKind::other: return "Other";
    }
    return "Other";
}

namespace {

struct Chain {
    Vertex from;
    Vertex to;
    int length;
};

// Walks every maximal run of core degree-2 vertices leaving a branch vertex.
std::vector<Chain> core_chains(const Graph& g, VertexSet core, VertexSet branch) {
    std::vector<Chain> chains;
    for (VertexSet b = branch; b; b &= b - 1) {
        const Vertex from = lowest(b);
        for (VertexSet nb = g.neighbors(from) & core; nb; nb &= nb - 1) {
            Vertex prev = from;
            Vertex cur = lowest(nb);
            int length = 1;
            while (!(branch & bit(cur))) {
                const Vertex next = lowest(g.neighbors(cur) & core & ~bit(prev));
                prev = cur;
                cur = next;
                ++length;
            }
            chains.push_back({from, cur, length});
        }
    }
    return chains;
}

GraphClass classify_bicyclic(const Graph& g) {
    const VertexSet core = two_core_vertices(g);
    VertexSet branch = 0;
    Vertex hub = -1;
    for (VertexSet rest = core; rest; rest &= rest - 1) {
        const Vertex v = lowest(rest);
        const int d = popcount(g.neighbors(v) & core);
        if (d >= 3) branch |= bit(v);
        if (d == 4) hub = v;
    }
    const auto chains = core_chains(g, core, branch);

    GraphClass c;
    if (hub >= 0) {
        std::vector<int> loops;
        for (const auto& ch : chains) loops.push_back(ch.length);
        std::sort(loops.begin(), loops.end());  // each loop is walked from both ends
        c.kind = GraphKind::bicyclic_infinity_l1;
        c.shape = CycleParameters{loops[0], loops[2], 1};
        return c;
    }

    const Vertex a = lowest(branch);
    if (is_biconnected(g.induced(core))) {
        std::vector<int> paths;
        for (const auto& ch : chains) {
            if (ch.from == a) paths.push_back(ch.length);
        }
        std::sort(paths.begin(), paths.end());
        c.kind = GraphKind::bicyclic_theta;
        c.shape = CycleParameters{paths[0] + paths[1], paths[0] + paths[2], paths[0] + 1};
        return c;
    }

    int loop_a = 0;
    int loop_b = 0;
    int bridge = 0;
    for (const auto& ch : chains) {
        if (ch.from != ch.to) {
            bridge = ch.length;
        } else if (ch.from == a) {
            loop_a = ch.length;
        } else {
            loop_b = ch.length;
        }
    }
    c.kind = GraphKind::bicyclic_infinity_l2plus;
    c.shape = CycleParameters{std::min(loop_a, loop_b), std::max(loop_a, loop_b), bridge + 1};
    return c;
}

}  // namespace

GraphClass classify(const Graph& g) {
    GraphClass c;
    c.connected = is_connected(g);
    if (!c.connected || g.order() == 0) return c;
    const int n = g.order();
    const int m = g.size();
    if (m == n - 1) {
        c.kind = GraphKind::tree;
    } else if (m == n) {
        c.kind = GraphKind::unicyclic;
    } else if (m == n + 1) {
        c = classify_bicyclic(g);
    }
    return c;
}

Graph make_infinity(int p, int q, int l) {
    if (p < 3 || q < 3 || l < 1) throw std::invalid_argument("infinity graph needs p, q >= 3 and l >= 1");
    const int n = l == 1 ? p + q - 1 : p + q + l - 2;
    if (n > kMaxOrder) throw LimitError("infinity graph exceeds 64 vertices");
    std::vector<Edge> e;
    for (int i = 0; i < p; ++i) e.emplace_back(i, (i + 1) % p);
    // Path from vertex 0 to the first vertex of the second cycle.
    Vertex joint = 0;
    for (int i = 0; i < l - 1; ++i) {
        const Vertex next = p + i;
        e.emplace_back(joint, next);
        joint = next;
    }
    const Vertex base = l == 1 ? p : p + l - 1;
    // Second cycle: joint, base, base+1, ..., base+q-2.
    Vertex prev = joint;
    for (int i = 0; i < q - 1; ++i) {
        e.emplace_back(prev, base + i);
        prev = base + i;
    }
    e.emplace_back(prev, joint);
    return Graph(n, e);
}

Graph make_theta(int p, int q, int l) {
    if (p < 3 || q < 3 || l < 2 || l > std::min(p, q)) {
        throw std::invalid_argument("theta graph needs p, q >= 3 and 2 <= l <= min(p, q)");
    }
    const int lengths[3] = {l - 1, p - l + 1, q - l + 1};
    if (std::count(std::begin(lengths), std::end(lengths), 1) > 1) {
        throw std::invalid_argument("theta parameters produce a multi-edge");
    }
    const int n = p + q - l;
    if (n > kMaxOrder) throw LimitError("theta graph exceeds 64 vertices");
    std::vector<Edge> e;
    Vertex next = 2;
    for (int len : lengths) {
        Vertex prev = 0;
        for (int i = 0; i < len - 1; ++i) {
            e.emplace_back(prev, next);
            prev = next++;
        }
        e.emplace_back(prev, 1);
    }
    return Graph(n, e);
}

}  // namespace irrt
