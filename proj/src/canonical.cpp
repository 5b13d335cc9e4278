#include "irrt/canonical.hpp"

#include <bit>

#include "irrt/error.hpp"

namespace irrt {

namespace {

constexpr int kCap = kMaxCanonicalOrder;
constexpr std::size_t kMaxStoredAutomorphisms = 256;

using Row = std::uint32_t;
using Certificate = std::array<std::uint16_t, kCap>;
using Perm = std::array<std::int8_t, kCap>;

struct Partition {
    Perm cell{};  // vertex -> index of its cell, cells ordered
    int cells = 0;
};

class CanonSearch {
public:
    explicit CanonSearch(const Graph& g) : n_(g.order()) {
        for (int v = 0; v < n_; ++v) adj_[static_cast<std::size_t>(v)] = static_cast<Row>(g.neighbors(v));
    }

    void run() {
        Partition root;
        root.cells = n_ == 0 ? 0 : 1;
        search(root, 0);
    }

    const Certificate& best() const { return best_cert_; }
    const Perm& best_label() const { return best_lab_; }

private:
    void refine(Partition& p) const {
        std::array<Row, kCap> members{};
        std::array<std::uint64_t, kCap> key{};
        std::array<int, kCap> order{};
        for (;;) {
            members.fill(0);
            for (int v = 0; v < n_; ++v) members[static_cast<std::size_t>(p.cell[static_cast<std::size_t>(v)])] |= Row{1} << v;
            // Packed key: cell index, then neighbour counts into cells 0, 1, ...
            // (4 bits each; n <= 12 keeps every field below 16).
            for (int v = 0; v < n_; ++v) {
                std::uint64_t k = static_cast<std::uint64_t>(p.cell[static_cast<std::size_t>(v)]) << 48;
                for (int c = 0; c < p.cells; ++c) {
                    const auto count = static_cast<std::uint64_t>(
                        std::popcount(adj_[static_cast<std::size_t>(v)] & members[static_cast<std::size_t>(c)]));
                    k |= count << (44 - 4 * c);
                }
                key[static_cast<std::size_t>(v)] = k;
                // Insertion sort keeps equal keys in vertex order.
                int i = v;
                while (i > 0 && key[static_cast<std::size_t>(order[static_cast<std::size_t>(i - 1)])] > k) {
                    order[static_cast<std::size_t>(i)] = order[static_cast<std::size_t>(i - 1)];
                    --i;
                }
                order[static_cast<std::size_t>(i)] = v;
            }
            int next = 0;
            for (int i = 0; i < n_; ++i) {
                if (i > 0 && key[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] !=
                                 key[static_cast<std::size_t>(order[static_cast<std::size_t>(i - 1)])]) {
                    ++next;
                }
                p.cell[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = static_cast<std::int8_t>(next);
            }
            const int cells = n_ == 0 ? 0 : next + 1;
            if (cells == p.cells) return;
            p.cells = cells;
        }
    }

    static Partition individualize(const Partition& p, int target, int w) {
        Partition child = p;
        for (std::size_t x = 0; x < kCap; ++x) {
            const int c = p.cell[x];
            if (c > target || (c == target && static_cast<int>(x) != w)) child.cell[x] = static_cast<std::int8_t>(c + 1);
        }
        child.cells = p.cells + 1;
        return child;
    }

    bool equivalent_to_tried(int w, Row tried, int depth) const {
        if (automorphisms_.empty()) return false;
        std::array<int, kCap> parent{};
        for (int v = 0; v < n_; ++v) parent[static_cast<std::size_t>(v)] = v;
        auto find = [&](int v) {
            while (parent[static_cast<std::size_t>(v)] != v) {
                parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
                v = parent[static_cast<std::size_t>(v)];
            }
            return v;
        };
        for (const auto& gamma : automorphisms_) {
            bool fixes_prefix = true;
            for (int i = 0; i < depth && fixes_prefix; ++i) {
                const int x = prefix_[static_cast<std::size_t>(i)];
                fixes_prefix = gamma[static_cast<std::size_t>(x)] == x;
            }
            if (!fixes_prefix) continue;
            for (int v = 0; v < n_; ++v) {
                const int a = find(v);
                const int b = find(gamma[static_cast<std::size_t>(v)]);
                if (a != b) parent[static_cast<std::size_t>(a)] = b;
            }
        }
        const int root = find(w);
        for (Row rest = tried; rest; rest &= rest - 1) {
            if (find(std::countr_zero(rest)) == root) return true;
        }
        return false;
    }

    void search(Partition p, int depth) {
        refine(p);
        if (p.cells == n_) {
            leaf(p);
            return;
        }
        std::array<int, kCap> size{};
        for (int v = 0; v < n_; ++v) ++size[static_cast<std::size_t>(p.cell[static_cast<std::size_t>(v)])];
        int target = 0;
        while (size[static_cast<std::size_t>(target)] == 1) ++target;

        Row tried = 0;
        for (int w = 0; w < n_; ++w) {
            if (p.cell[static_cast<std::size_t>(w)] != target) continue;
            if (tried && equivalent_to_tried(w, tried, depth)) continue;
            prefix_[static_cast<std::size_t>(depth)] = w;
            search(individualize(p, target, w), depth + 1);
            tried |= Row{1} << w;
        }
    }

    void leaf(const Partition& p) {
        Perm inv{};
        for (int v = 0; v < n_; ++v) inv[static_cast<std::size_t>(p.cell[static_cast<std::size_t>(v)])] = static_cast<std::int8_t>(v);
        Certificate cert{};
        for (int pos = 0; pos < n_; ++pos) {
            std::uint16_t row = 0;
            for (Row nb = adj_[static_cast<std::size_t>(inv[static_cast<std::size_t>(pos)])]; nb; nb &= nb - 1) {
                row = static_cast<std::uint16_t>(row | (1u << p.cell[static_cast<std::size_t>(std::countr_zero(nb))]));
            }
            cert[static_cast<std::size_t>(pos)] = row;
        }

        if (!have_leaf_) {
            have_leaf_ = true;
            first_cert_ = best_cert_ = cert;
            first_inv_ = best_inv_ = inv;
            best_lab_ = p.cell;
            return;
        }
        if (cert == first_cert_) {
            record_automorphism(p.cell, first_inv_);
            return;
        }
        if (cert < best_cert_) {
            best_cert_ = cert;
            best_inv_ = inv;
            best_lab_ = p.cell;
        } else if (cert == best_cert_) {
            record_automorphism(p.cell, best_inv_);
        }
    }

    // Leaves with equal certificates differ by the automorphism v -> other_inv[lab[v]].
    void record_automorphism(const Perm& lab, const Perm& other_inv) {
        if (automorphisms_.size() >= kMaxStoredAutomorphisms) return;
        Perm gamma{};
        bool identity = true;
        for (int v = 0; v < n_; ++v) {
            gamma[static_cast<std::size_t>(v)] = other_inv[static_cast<std::size_t>(lab[static_cast<std::size_t>(v)])];
            identity = identity && gamma[static_cast<std::size_t>(v)] == v;
        }
        if (!identity) automorphisms_.push_back(gamma);
    }

    int n_;
    std::array<Row, kCap> adj_{};
    std::array<int, kCap> prefix_{};
    bool have_leaf_ = false;
    Certificate first_cert_{};
    Certificate best_cert_{};
    Perm first_inv_{};
    Perm best_inv_{};
    Perm best_lab_{};
    std::vector<Perm> automorphisms_;
};

}  // namespace

Graph CanonicalCode::to_graph() const {
    std::vector<VertexSet> r(static_cast<std::size_t>(order));
    for (int v = 0; v < order; ++v) r[static_cast<std::size_t>(v)] = rows[static_cast<std::size_t>(v)];
    return Graph::from_rows(r);
}

std::size_t CanonicalCodeHash::operator()(const CanonicalCode& c) const noexcept {
    std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(c.order);
    for (int v = 0; v < c.order; ++v) {
        h ^= c.rows[static_cast<std::size_t>(v)];
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
}

CanonicalLabeling canonical_labeling(const Graph& g) {
    if (g.order() > kMaxCanonicalOrder) {
        throw LimitError("canonical labelling supports at most " + std::to_string(kMaxCanonicalOrder) +
                         " vertices, got " + std::to_string(g.order()));
    }
    CanonSearch search(g);
    search.run();
    CanonicalLabeling out;
    out.code.order = g.order();
    out.code.rows = search.best();
    out.label.assign(search.best_label().begin(), search.best_label().begin() + g.order());
    return out;
}

CanonicalCode canonical_form(const Graph& g) { return canonical_labeling(g).code; }

bool are_isomorphic(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

}  // namespace irrt
