#include "irrt/enumerate.hpp"

#include <algorithm>
#include <unordered_set>

#include "irrt/error.hpp"
#include "irrt/parallel.hpp"

namespace irrt {

namespace {

using CodeSet = std::unordered_set<CanonicalCode, CanonicalCodeHash>;

std::optional<std::vector<int>> next_rooted_tree(const std::vector<int>& pred, int p = -1) {
    if (p < 0) {
        p = static_cast<int>(pred.size()) - 1;
        while (pred[static_cast<std::size_t>(p)] == 1) --p;
    }
    if (p == 0) return std::nullopt;
    int q = p - 1;
    while (pred[static_cast<std::size_t>(q)] != pred[static_cast<std::size_t>(p)] - 1) --q;
    std::vector<int> result = pred;
    for (std::size_t i = static_cast<std::size_t>(p); i < result.size(); ++i) {
        result[i] = result[i - static_cast<std::size_t>(p - q)];
    }
    return result;
}

// Splits off the leftmost subtree of the root: (its levels shifted up by one,
// the remaining tree).
std::pair<std::vector<int>, std::vector<int>> split_tree(const std::vector<int>& layout) {
    std::size_t m = layout.size();
    bool seen_one = false;
    for (std::size_t i = 0; i < layout.size(); ++i) {
        if (layout[i] != 1) continue;
        if (seen_one) {
            m = i;
            break;
        }
        seen_one = true;
    }
    std::vector<int> left;
    for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
    std::vector<int> rest{0};
    rest.insert(rest.end(), layout.begin() + static_cast<std::ptrdiff_t>(m), layout.end());
    return {left, rest};
}

std::vector<int> next_free_tree(const std::vector<int>& candidate) {
    const auto [left, rest] = split_tree(candidate);
    const int left_height = *std::max_element(left.begin(), left.end());
    const int rest_height = *std::max_element(rest.begin(), rest.end());
    bool valid = rest_height >= left_height;
    if (valid && rest_height == left_height) {
        if (left.size() > rest.size() || (left.size() == rest.size() && left > rest)) valid = false;
    }
    if (valid) return candidate;

    const int p = static_cast<int>(left.size());
    std::vector<int> next = *next_rooted_tree(candidate, p);
    if (candidate[static_cast<std::size_t>(p)] > 2) {
        const auto new_left = split_tree(next).first;
        const int height = *std::max_element(new_left.begin(), new_left.end());
        const std::size_t tail = static_cast<std::size_t>(height + 1);
        for (std::size_t i = 0; i < tail; ++i) next[next.size() - tail + i] = static_cast<int>(i) + 1;
    }
    return next;
}

std::vector<Graph> sorted_representatives(const CodeSet& codes) {
    std::vector<CanonicalCode> sorted(codes.begin(), codes.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<Graph> out;
    out.reserve(sorted.size());
    for (const auto& c : sorted) out.push_back(c.to_graph());
    return out;
}

// Canonical dedup of every child produced by `expand`, fanned out over the
// parents; workers collect codes locally and the union is sorted.
template <typename Expand>
std::vector<Graph> augment(const std::vector<Graph>& parents, unsigned threads, Expand expand) {
    if (threads == 0) threads = default_threads();
    std::vector<CodeSet> local(threads);
    parallel_for(parents.size(), threads, [&](std::size_t i, unsigned worker) {
        expand(parents[i], [&](const Graph& child) { local[worker].insert(canonical_form(child)); });
    });
    CodeSet merged;
    for (auto& part : local) merged.merge(part);
    return sorted_representatives(merged);
}

void require(bool ok, const std::string& what) {
    if (!ok) throw LimitError(what);
}

}  // namespace

std::vector<std::vector<int>> free_tree_level_sequences(int n) {
    require(n >= 1 && n <= kMaxOrder, "free tree order " + std::to_string(n) + " outside [1, 64]");
    if (n == 1) return {{0}};
    std::vector<int> layout;
    for (int i = 0; i <= n / 2; ++i) layout.push_back(i);
    for (int i = 1; i < (n + 1) / 2; ++i) layout.push_back(i);

    std::vector<std::vector<int>> out;
    for (;;) {
        layout = next_free_tree(layout);
        out.push_back(layout);
        auto next = next_rooted_tree(layout);
        if (!next) break;
        layout = std::move(*next);
    }
    return out;
}

Graph tree_from_level_sequence(const std::vector<int>& levels) {
    std::vector<Edge> edges;
    std::vector<int> stack;
    for (int i = 0; i < static_cast<int>(levels.size()); ++i) {
        while (!stack.empty() && levels[static_cast<std::size_t>(stack.back())] >= levels[static_cast<std::size_t>(i)]) {
            stack.pop_back();
        }
        if (!stack.empty()) edges.emplace_back(stack.back(), i);
        stack.push_back(i);
    }
    return Graph(static_cast<int>(levels.size()), edges);
}

GraphCatalog::GraphCatalog(unsigned threads) : threads_(threads == 0 ? default_threads() : threads) {}

const std::vector<Graph>& GraphCatalog::trees(int n) {
    require(n >= 1 && n <= kMaxTreeOrder, "tree enumeration supports 1 <= n <= 12, got " + std::to_string(n));
    auto it = trees_.find(n);
    if (it != trees_.end()) return it->second;
    CodeSet codes;
    for (const auto& levels : free_tree_level_sequences(n)) codes.insert(canonical_form(tree_from_level_sequence(levels)));
    return trees_.emplace(n, sorted_representatives(codes)).first->second;
}

const std::vector<Graph>& GraphCatalog::connected(int n, int m) {
    require(n >= 1, "connected enumeration needs n >= 1");
    if (m >= n - 1 && m <= n + 1 && n <= kMaxSparseOrder) {
        if (m == n - 1) return trees(n);
        auto key = std::make_pair(n, m);
        auto it = sparse_.find(key);
        if (it != sparse_.end()) return it->second;
        const auto& parents = connected(n, m - 1);
        auto children = augment(parents, threads_, [](const Graph& g, auto&& emit) {
            for (Vertex u = 0; u < g.order(); ++u) {
                for (Vertex v = u + 1; v < g.order(); ++v) {
                    if (!g.has_edge(u, v)) emit(g.with_edge(u, v));
                }
            }
        });
        return sparse_.emplace(key, std::move(children)).first->second;
    }
    require(n <= kMaxConnectedOrder, "connected enumeration with m = " + std::to_string(m) +
                                         " supports n <= 9, got " + std::to_string(n));
    auto key = std::make_pair(n, m);
    auto it = dense_.find(key);
    if (it != dense_.end()) return it->second;
    std::vector<Graph> slice;
    for (const auto& g : connected_all(n)) {
        if (g.size() == m) slice.push_back(g);
    }
    return dense_.emplace(key, std::move(slice)).first->second;
}

const std::vector<Graph>& GraphCatalog::connected_all(int n) {
    require(n >= 1 && n <= kMaxConnectedOrder,
            "unrestricted connected enumeration supports 1 <= n <= 9, got " + std::to_string(n));
    auto it = all_.find(n);
    if (it != all_.end()) return it->second;
    if (n == 1) return all_.emplace(1, std::vector<Graph>{Graph(1)}).first->second;
    // Every connected graph has a vertex whose removal leaves it connected.
    const auto& parents = connected_all(n - 1);
    auto children = augment(parents, threads_, [](const Graph& g, auto&& emit) {
        const VertexSet full = g.all_vertices();
        for (VertexSet s = 1; s <= full; ++s) emit(g.with_vertex(s));
    });
    return all_.emplace(n, std::move(children)).first->second;
}

std::vector<Graph> enumerate_trees(int n) {
    GraphCatalog catalog(1);
    return catalog.trees(n);
}

std::vector<Graph> enumerate_connected(int n, int m, unsigned threads) {
    GraphCatalog catalog(threads);
    return catalog.connected(n, m);
}

std::vector<Graph> enumerate_connected_all(int n, unsigned threads) {
    GraphCatalog catalog(threads);
    return catalog.connected_all(n);
}

std::vector<std::pair<Graph, GraphClass>> enumerate_bicyclic_by_class(GraphCatalog& catalog, int n) {
    require(n <= kMaxSparseOrder, "bicyclic enumeration supports n <= 11, got " + std::to_string(n));
    std::vector<std::pair<Graph, GraphClass>> out;
    if (n < 4) return out;
    for (const auto& g : catalog.connected(n, n + 1)) out.emplace_back(g, classify(g));
    return out;
}

std::vector<std::pair<Graph, GraphClass>> enumerate_bicyclic_by_class(int n, unsigned threads) {
    GraphCatalog catalog(threads);
    return enumerate_bicyclic_by_class(catalog, n);
}

}  // namespace irrt
