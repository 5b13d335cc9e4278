#include "irrt/sequences.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace irrt {

Graphicality graphicality(const DegreeSequence& d) {
    if (d.sum() % 2 != 0) return Graphicality::odd_sum;
    const long n = static_cast<long>(d.size());
    if (n > 0 && d[0] > n - 1) return Graphicality::not_graphical;
    long left = 0;
    for (long k = 1; k <= n; ++k) {
        left += d[static_cast<std::size_t>(k - 1)];
        long right = k * (k - 1);
        for (long i = k; i < n; ++i) right += std::min<long>(d[static_cast<std::size_t>(i)], k);
        if (left > right) return Graphicality::not_graphical;
    }
    return Graphicality::graphical;
}

bool is_graphical(const DegreeSequence& d) { return graphicality(d) == Graphicality::graphical; }

bool has_connected_realization(const DegreeSequence& d) {
    const long n = static_cast<long>(d.size());
    if (n == 0) return false;
    if (n == 1) return d[0] == 0;
    return is_graphical(d) && d.sum() >= 2 * (n - 1) && d[d.size() - 1] >= 1;
}

namespace {

Vertex lowest(VertexSet s) { return std::countr_zero(s); }

std::vector<VertexSet> havel_hakimi(const DegreeSequence& d) {
    const int n = static_cast<int>(d.size());
    std::vector<int> residual(d.begin(), d.end());
    std::vector<VertexSet> rows(static_cast<std::size_t>(n), 0);
    std::vector<int> order(static_cast<std::size_t>(n));
    for (;;) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return residual[static_cast<std::size_t>(a)] > residual[static_cast<std::size_t>(b)]; });
        const int head = order[0];
        const int need = residual[static_cast<std::size_t>(head)];
        if (need == 0) break;
        if (need > n - 1) throw std::logic_error("Havel-Hakimi ran out of partners");
        residual[static_cast<std::size_t>(head)] = 0;
        for (int i = 1; i <= need; ++i) {
            const int w = order[static_cast<std::size_t>(i)];
            if (residual[static_cast<std::size_t>(w)] == 0) throw std::logic_error("Havel-Hakimi ran out of partners");
            --residual[static_cast<std::size_t>(w)];
            rows[static_cast<std::size_t>(head)] |= bit(w);
            rows[static_cast<std::size_t>(w)] |= bit(head);
        }
    }
    return rows;
}

}  // namespace

Graph realize_connected(const DegreeSequence& d) {
    if (!has_connected_realization(d)) {
        throw std::invalid_argument("sequence " + d.to_string() + " has no connected realization");
    }
    Graph g = Graph::from_rows(havel_hakimi(d));
    const long limit = static_cast<long>(g.order()) * std::max(g.size(), 1);
    for (long step = 0; !is_connected(g); ++step) {
        if (step >= limit) throw std::logic_error("connectivity repair exceeded its step limit");
        // Components are listed by lowest vertex; one of them has a cycle
        // because the edge count is at least n - 1.
        std::vector<VertexSet> components;
        for (VertexSet rest = g.all_vertices(); rest;) {
            const VertexSet comp = component_of(g, lowest(rest));
            components.push_back(comp);
            rest &= ~comp;
        }
        std::optional<Edge> cycle_edge;
        std::size_t cyclic = 0;
        for (std::size_t c = 0; c < components.size() && !cycle_edge; ++c) {
            for (auto [x, y] : g.edges()) {
                if (!(components[c] & bit(x))) continue;
                if (component_of(g.without_edge(x, y), x) & bit(y)) {
                    cycle_edge = Edge{x, y};
                    cyclic = c;
                    break;
                }
            }
        }
        if (!cycle_edge) throw std::logic_error("disconnected realization without a cycle");
        const std::size_t other = cyclic == 0 ? 1 : 0;
        std::optional<Edge> other_edge;
        for (auto e : g.edges()) {
            if (components[other] & bit(e.first)) {
                other_edge = e;
                break;
            }
        }
        if (!other_edge) throw std::logic_error("component without edges");
        const auto [x, y] = *cycle_edge;
        const auto [a, b] = *other_edge;
        g = g.without_edge(x, y).without_edge(a, b).with_edge(x, a).with_edge(y, b);
    }
    return g;
}

namespace {

struct SequenceWalker {
    const SequenceFamilyConstraint& c;
    const std::function<void(const DegreeSequence&)>& visit;
    std::optional<long> max_irr_t;
    std::vector<int> prefix;

    void emit() {
        DegreeSequence d(prefix);
        if (c.require_connected_realizable && !has_connected_realization(d)) return;
        if (c.require_graphical && !is_graphical(d)) return;
        if (std::find(c.forbidden.begin(), c.forbidden.end(), d) != c.forbidden.end()) return;
        visit(d);
    }

    // `irr` is the irregularity among the prefix entries.
    void extend(int ceiling, long sum, long irr) {
        const int placed = static_cast<int>(prefix.size());
        const int left = c.n - placed;
        if (left == 0) {
            if (c.m ? sum == 2L * *c.m : sum % 2 == 0) emit();
            return;
        }
        for (int value = ceiling; value >= c.min_degree; --value) {
            const long new_sum = sum + value;
            const int rest = left - 1;
            if (c.m) {
                const long target = 2L * *c.m;
                if (new_sum + static_cast<long>(rest) * value < target) break;  // smaller values only do worse
                if (new_sum + static_cast<long>(rest) * c.min_degree > target) continue;
            }
            // Adding `value` below every prefix entry adds sum(prefix) - placed * value.
            const long new_irr = irr + (sum - static_cast<long>(placed) * value);
            if (max_irr_t) {
                // Later entries are <= value, so each prefix entry i gains at least
                // (d_i - value) against each of them.
                const long spread = new_sum - static_cast<long>(placed + 1) * value;
                if (new_irr + static_cast<long>(rest) * spread > *max_irr_t) continue;
            }
            prefix.push_back(value);
            extend(value, new_sum, new_irr);
            prefix.pop_back();
        }
    }
};

}  // namespace

void for_each_sequence(const SequenceFamilyConstraint& c, const std::function<void(const DegreeSequence&)>& visit,
                       std::optional<long> max_irr_t) {
    if (c.n < 0 || c.min_degree < 0 || (c.m && *c.m < 0)) {
        throw std::invalid_argument("inconsistent sequence constraint");
    }
    if (c.n == 0) return;
    SequenceWalker walker{c, visit, max_irr_t, {}};
    walker.prefix.reserve(static_cast<std::size_t>(c.n));
    walker.extend(std::max(c.n - 1, 0), 0, 0);
}

std::vector<DegreeSequence> enumerate_sequences(const SequenceFamilyConstraint& c, std::optional<long> max_irr_t) {
    std::vector<DegreeSequence> out;
    for_each_sequence(c, [&](const DegreeSequence& d) { out.push_back(d); }, max_irr_t);
    return out;
}

}  // namespace irrt
