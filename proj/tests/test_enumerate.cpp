#include <cmath>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"

#include "irrt/canonical.hpp"
#include "irrt/enumerate.hpp"
#include "irrt/error.hpp"

using namespace irrt;

namespace {

// Distinct isomorphism classes among the labeled trees on n vertices.
std::size_t labeled_tree_classes(int n) {
    std::set<std::string> certs;
    oracle::for_each_labeled_tree(n, [&](const std::vector<Edge>& edges) {
        certs.insert(oracle::tree_certificate(n, edges));
    });
    return certs.size();
}

std::set<CanonicalCode> codes_of(const std::vector<Graph>& graphs) {
    std::set<CanonicalCode> out;
    for (const auto& g : graphs) out.insert(canonical_form(g));
    return out;
}

}  // namespace

TEST_CASE("canonical form examples") {
    const Graph p4 = make_path(4);
    const std::vector<int> perm{2, 0, 3, 1};
    CHECK(canonical_form(p4) == canonical_form(p4.relabeled(perm)));
    CHECK(canonical_form(p4) != canonical_form(make_star(4)));

    std::set<CanonicalCode> codes;
    long labeled = 0;
    oracle::for_each_labeled_tree(4, [&](const std::vector<Edge>& e) {
        codes.insert(canonical_form(Graph(4, e)));
        ++labeled;
    });
    CHECK(labeled == 16);
    CHECK(codes.size() == 2);

    CHECK_THROWS_AS(canonical_form(Graph(13)), LimitError);
    CHECK(canonical_form(Graph(0)).order == 0);
}

TEST_CASE("canonical labeling maps the graph onto its code") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const Graph g = oracle::random_graph(rng, 1 + trial % 12, 0.4);
        const auto lab = canonical_labeling(g);
        CHECK(g.relabeled(lab.label) == lab.code.to_graph());
    }
}

TEST_CASE("canonical codes are invariant under relabeling and separate non-isomorphic graphs") {
    std::mt19937_64 rng(17);
    std::vector<Graph> sample;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 1 + trial % 12;
        const Graph g = oracle::random_graph(rng, n, 0.15 + 0.1 * (trial % 7));
        const Graph h = g.relabeled(oracle::random_permutation(rng, n));
        CHECK(canonical_form(g) == canonical_form(h));
        if (n <= 7) sample.push_back(g);
    }
    // Regular and highly symmetric graphs exercise the pruning paths.
    for (int n = 3; n <= 12; ++n) {
        const Graph c = make_cycle(n);
        CHECK(canonical_form(c) == canonical_form(c.relabeled(oracle::random_permutation(rng, n))));
    }
    for (std::size_t i = 0; i < sample.size(); ++i) {
        for (std::size_t j = i + 1; j < sample.size(); ++j) {
            if (sample[i].order() != sample[j].order() || sample[i].size() != sample[j].size()) continue;
            CHECK((canonical_form(sample[i]) == canonical_form(sample[j])) ==
                  oracle::isomorphic_by_permutation(sample[i], sample[j]));
        }
    }
}

TEST_CASE("codes separate all graphs on six vertices") {
    // Isomorphism classes of all 2^15 labeled graphs: 156 by the permutation oracle.
    std::set<CanonicalCode> codes;
    oracle::for_each_labeled_graph(6, [&](const std::vector<Edge>& e) { codes.insert(canonical_form(Graph(6, e))); });
    std::vector<Graph> reps;
    for (const auto& c : codes) reps.push_back(c.to_graph());
    for (std::size_t i = 0; i < reps.size(); ++i) {
        for (std::size_t j = i + 1; j < reps.size(); ++j) {
            if (reps[i].size() == reps[j].size() && degree_sequence(reps[i]) == degree_sequence(reps[j])) {
                CHECK_FALSE(oracle::isomorphic_by_permutation(reps[i], reps[j]));
            }
        }
    }
    CHECK(codes.size() == 156);
}

TEST_CASE("tree counts match labeled enumeration classes") {
    for (int n = 2; n <= 8; ++n) {
        CAPTURE(n);
        CHECK(enumerate_trees(n).size() == labeled_tree_classes(n));
    }
    CHECK(enumerate_trees(1).size() == 1);
    CHECK(enumerate_trees(4).size() == 2);
    CHECK(enumerate_trees(7).size() == 11);
    CHECK_THROWS_AS(enumerate_trees(13), LimitError);
    CHECK_THROWS_AS(enumerate_trees(0), LimitError);
}

TEST_CASE("larger tree counts match the labeled count through orbit sizes") {
    // Sum over classes of n!/|Aut| equals n^(n-2); |Aut| is counted by brute force.
    for (int n = 5; n <= 8; ++n) {
        double labeled = 0;
        double factorial = 1;
        for (int i = 2; i <= n; ++i) factorial *= i;
        for (const auto& t : enumerate_trees(n)) {
            long aut = 0;
            std::vector<int> perm(static_cast<std::size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            do {
                if (t.relabeled(perm) == t) ++aut;
            } while (std::next_permutation(perm.begin(), perm.end()));
            labeled += factorial / static_cast<double>(aut);
        }
        CHECK(labeled == doctest::Approx(std::pow(n, n - 2)).epsilon(1e-12));
    }
}

TEST_CASE("enumerated families are duplicate-free, connected and of the right size") {
    GraphCatalog catalog(2);
    for (int n = 1; n <= 10; ++n) {
        for (int m = n - 1; m <= n + 1; ++m) {
            const auto& graphs = catalog.connected(n, m);
            CHECK(codes_of(graphs).size() == graphs.size());
            for (const auto& g : graphs) {
                CHECK(g.order() == n);
                CHECK(g.size() == m);
                CHECK(is_connected(g));
                CHECK(degree_sequence(g).sum() == 2L * m);
            }
        }
        CHECK(catalog.connected(n, n - 1).size() == catalog.trees(n).size());
    }
}

TEST_CASE("small connected families") {
    CHECK(enumerate_connected(3, 3).size() == 1);
    CHECK(enumerate_connected(5, 5).size() == 5);
    const auto bic = enumerate_connected(4, 5);
    REQUIRE(bic.size() == 1);
    CHECK(are_isomorphic(bic[0], Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}})));
    CHECK_THROWS_AS(enumerate_connected(10, 15), LimitError);
    CHECK_THROWS_AS(enumerate_connected(12, 12), LimitError);
}

TEST_CASE("connected graphs on up to six vertices match labeled enumeration") {
    for (int n = 1; n <= 6; ++n) {
        std::map<int, std::set<CanonicalCode>> by_size;
        oracle::for_each_labeled_graph(n, [&](const std::vector<Edge>& e) {
            if (oracle::connected_by_dfs(n, e)) by_size[static_cast<int>(e.size())].insert(canonical_form(Graph(n, e)));
        });
        std::size_t total = 0;
        for (const auto& [m, codes] : by_size) {
            CHECK(codes_of(enumerate_connected(n, m, 1)) == codes);
            total += codes.size();
        }
        CHECK(enumerate_connected_all(n, 1).size() == total);
    }
}

TEST_CASE("edge augmentation matches the filtered vertex augmentation") {
    GraphCatalog catalog(1);
    for (int n = 1; n <= 8; ++n) {
        for (int m = std::max(n - 1, 0); m <= n + 1; ++m) {
            std::set<CanonicalCode> filtered;
            for (const auto& g : catalog.connected_all(n)) {
                if (g.size() == m) filtered.insert(canonical_form(g));
            }
            CHECK(codes_of(catalog.connected(n, m)) == filtered);
        }
    }
}

TEST_CASE("enumeration output does not depend on the worker count") {
    GraphCatalog one(1);
    GraphCatalog four(4);
    for (int n = 5; n <= 8; ++n) {
        CHECK(one.connected_all(n) == four.connected_all(n));
        CHECK(one.connected(n, n + 1) == four.connected(n, n + 1));
    }
}

TEST_CASE("bicyclic graphs partition into the three kinds") {
    GraphCatalog catalog(1);
    const auto four = enumerate_bicyclic_by_class(catalog, 4);
    REQUIRE(four.size() == 1);
    CHECK(four[0].second.kind == GraphKind::bicyclic_theta);

    bool bowtie_found = false;
    for (const auto& [g, c] : enumerate_bicyclic_by_class(catalog, 5)) {
        if (are_isomorphic(g, make_infinity(3, 3, 1))) {
            bowtie_found = true;
            CHECK(c.kind == GraphKind::bicyclic_infinity_l1);
        }
    }
    CHECK(bowtie_found);

    for (int n = 4; n <= 10; ++n) {
        std::map<GraphKind, long> counts;
        const auto tagged = enumerate_bicyclic_by_class(catalog, n);
        for (const auto& [g, c] : tagged) ++counts[c.kind];
        CHECK(counts[GraphKind::other] == 0);
        CHECK(counts[GraphKind::bicyclic_infinity_l1] + counts[GraphKind::bicyclic_infinity_l2plus] +
                  counts[GraphKind::bicyclic_theta] ==
              static_cast<long>(tagged.size()));
    }
    CHECK(enumerate_bicyclic_by_class(catalog, 3).empty());
    CHECK_THROWS_AS(enumerate_bicyclic_by_class(catalog, 12), LimitError);
}

TEST_CASE("free tree level sequences") {
    CHECK(free_tree_level_sequences(1) == std::vector<std::vector<int>>{{0}});
    CHECK(free_tree_level_sequences(2).size() == 1);
    for (int n = 2; n <= 12; ++n) {
        const auto levels = free_tree_level_sequences(n);
        std::set<CanonicalCode> codes;
        for (const auto& l : levels) {
            const Graph t = tree_from_level_sequence(l);
            CHECK(t.size() == n - 1);
            CHECK(is_connected(t));
            codes.insert(canonical_form(t));
        }
        CHECK(codes.size() == levels.size());
    }
}
