#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "irrt/canonical.hpp"
#include "irrt/error.hpp"
#include "irrt/verify.hpp"

using namespace irrt;

namespace {

DegreeSequence runs(std::vector<std::pair<int, int>> r) { return DegreeSequence::from_runs(r); }

std::vector<long> values(const std::vector<RankedValue>& ranks) {
    std::vector<long> out;
    for (const auto& r : ranks) out.push_back(r.value);
    return out;
}

GraphCatalog& shared_catalog() {
    static GraphCatalog catalog(2);
    return catalog;
}

}  // namespace

TEST_CASE("k smallest values for trees at n = 8") {
    const auto km = k_minimal(shared_catalog(), Family::tree, 8, 3);
    REQUIRE(km.graph_level.size() == 3);
    CHECK(values(km.graph_level) == std::vector<long>{12, 22, 28});
    CHECK(km.graph_level[0].sequences == std::vector{runs({{2, 6}, {1, 2}})});
    CHECK(km.graph_level[1].sequences == std::vector{runs({{3, 1}, {2, 4}, {1, 3}})});
    CHECK(km.graph_level[2].sequences == std::vector{runs({{3, 2}, {2, 2}, {1, 4}})});
    CHECK(km.levels_agree());
}

TEST_CASE("k smallest values for unicyclic graphs at n = 7") {
    const auto km = k_minimal(shared_catalog(), Family::unicyclic, 7, 3);
    CHECK(values(km.graph_level) == std::vector<long>{0, 12, 20});
    CHECK(km.graph_level[0].sequences == std::vector{runs({{2, 7}})});
    CHECK(km.graph_level[1].sequences == std::vector{runs({{3, 1}, {2, 5}, {1, 1}})});
    CHECK(km.graph_level[2].sequences == std::vector{runs({{3, 2}, {2, 3}, {1, 2}})});
    CHECK(km.levels_agree());
}

TEST_CASE("k smallest values for bicyclic graphs at n = 8") {
    const auto km = k_minimal(shared_catalog(), Family::bicyclic_all, 8, 3);
    CHECK(values(km.graph_level) == std::vector<long>{12, 14, 22});
    CHECK(km.graph_level[0].sequences == std::vector{runs({{3, 2}, {2, 6}})});
    CHECK(km.graph_level[1].sequences == std::vector{runs({{4, 1}, {2, 7}})});
    CHECK(km.graph_level[2].sequences == std::vector{runs({{3, 3}, {2, 4}, {1, 1}})});
    CHECK(km.levels_agree());
    CHECK_THROWS_AS(k_minimal(shared_catalog(), Family::tree, 8, 0), std::invalid_argument);
}

TEST_CASE("ranked values are strictly increasing with sorted sequence sets") {
    for (Family f : {Family::tree, Family::unicyclic, Family::bicyclic_all, Family::bicyclic_theta}) {
        const auto km = k_minimal(shared_catalog(), f, 9, 6);
        for (std::size_t i = 0; i < km.graph_level.size(); ++i) {
            const auto& r = km.graph_level[i];
            if (i > 0) CHECK(km.graph_level[i - 1].value < r.value);
            for (std::size_t j = 1; j < r.sequences.size(); ++j) CHECK(r.sequences[j - 1] > r.sequences[j]);
            REQUIRE(r.witness.has_value());
            CHECK(total_irregularity(*r.witness) == r.value);
            CHECK(r.graph_count >= 1);
        }
    }
}

TEST_CASE("tree reports") {
    const auto reports = verify_trees(shared_catalog(), 6, 10);
    REQUIRE(reports.size() == 5);
    for (const auto& r : reports) CHECK(r.passed());
    CHECK(values(reports[0].ranks) == std::vector<long>{8, 14, 16});
    CHECK(reports[0].ranks[2].sequences == std::vector{DegreeSequence{3, 3, 1, 1, 1, 1}});
    CHECK(values(reports[1].ranks) == std::vector<long>{10, 18, 22});
    CHECK(values(reports[4].ranks) == std::vector<long>{16, 30, 40});
}

TEST_CASE("unicyclic and bicyclic reports") {
    const auto u = verify_unicyclic(shared_catalog(), 5, 5);
    REQUIRE(u.size() == 1);
    CHECK(u[0].passed());
    CHECK(values(u[0].ranks) == std::vector<long>{0, 8, 12});

    const auto bplus = verify_family(shared_catalog(), Family::bicyclic_infinity_l1, 7);
    CHECK(bplus.passed());
    CHECK(bplus.ranks[0].value == 12);
    CHECK(bplus.ranks[0].sequences == std::vector{DegreeSequence{4, 2, 2, 2, 2, 2, 2}});

    const auto theta = verify_family(shared_catalog(), Family::bicyclic_theta, 5);
    CHECK(theta.passed());
    CHECK(theta.ranks[0].value == 6);
    CHECK(theta.ranks[0].sequences == std::vector{DegreeSequence{3, 3, 2, 2, 2}});

    for (const auto& r : verify_bicyclic(shared_catalog(), 7, 9)) CHECK(r.passed());
}

TEST_CASE("below-threshold orders are informational") {
    const auto r = verify_family(shared_catalog(), Family::tree, 4);
    REQUIRE(r.verdict.size() == 3);
    CHECK(r.verdict[0] == Verdict::pass);
    CHECK(r.verdict[1] == Verdict::informational);
    CHECK(r.verdict[2] == Verdict::informational);
    CHECK_FALSE(r.expected[2].has_value());
    CHECK(r.ranks.size() == 2);
    CHECK(r.passed());

    const auto b = verify_family(shared_catalog(), Family::bicyclic_infinity_l2plus, 6);
    for (auto v : b.verdict) CHECK(v == Verdict::informational);
}

TEST_CASE("connected family minimum is attained by regular sequences") {
    for (int n = 1; n <= 7; ++n) {
        const auto r = verify_family(shared_catalog(), Family::connected_all, n);
        CHECK(r.passed());
        REQUIRE(r.ranks.size() == 1);
        CHECK(r.ranks[0].value == 0);
        for (const auto& d : r.ranks[0].sequences) CHECK(d.is_constant());
    }
}

TEST_CASE("sequence level agrees with graph level") {
    for (int n = 2; n <= 9; ++n) {
        for (Family f : {Family::tree, Family::unicyclic, Family::bicyclic_all}) {
            if (f != Family::tree && n < 4) continue;
            const auto km = k_minimal(shared_catalog(), f, n, 4);
            CAPTURE(n);
            CHECK(km.levels_agree());
        }
    }
    CHECK(k_minimal(shared_catalog(), Family::connected_all, 6, 5).levels_agree());
    CHECK_FALSE(k_minimal(shared_catalog(), Family::bicyclic_theta, 7, 2).sequence_level.has_value());
}

TEST_CASE("bounds") {
    const auto reports = verify_bounds(shared_catalog(), 1, 8);
    for (const auto& r : reports) {
        CAPTURE(r.n);
        CHECK(r.passed());
        CHECK(r.connected_covered);
        CHECK(r.star_is_unique_max);
    }
    CHECK(reports[3].tree_max == 6);
    CHECK(reports[3].tree_max_count == 1);
    CHECK(12 * reports[3].tree_max <= cubic_bound_numerator(4));
    CHECK(cubic_bound_numerator(4) == 75);
    CHECK(cubic_bound_numerator(5) == 168);
    CHECK(reports[4].connected_checked == 21);
    CHECK_THROWS_AS(verify_bounds(shared_catalog(), 1, 13), LimitError);
}

TEST_CASE("cubic bound also holds on disconnected random graphs") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 1 + trial % 40;
        const Graph g = oracle::random_graph(rng, n, 0.05 * (1 + trial % 19));
        CHECK(12 * total_irregularity(g) <= cubic_bound_numerator(n));
    }
}

TEST_CASE("conjecture search at small n") {
    const auto seq = check_conjecture(shared_catalog(), 4, 4, SearchMode::sequence);
    REQUIRE(seq.levels.size() == 1);
    CHECK(seq.levels[0].min_nonregular == 4);
    CHECK(seq.levels[0].minimizers == std::vector<DegreeSequence>{{3, 3, 2, 2}, {2, 2, 1, 1}});
    CHECK_FALSE(seq.first.has_value());

    const auto graph = check_conjecture(shared_catalog(), 4, 4, SearchMode::graph);
    CHECK(graph.levels[0].min_nonregular == 4);
    CHECK(graph.levels[0].minimizers == seq.levels[0].minimizers);

    CHECK_THROWS_AS(check_conjecture(shared_catalog(), 1, 10, SearchMode::graph), LimitError);
    CHECK_THROWS_AS(check_conjecture(shared_catalog(), 1, 17, SearchMode::sequence), LimitError);
}

TEST_CASE("conjecture counterexample records are well formed") {
    const auto r = check_conjecture(shared_catalog(), 3, 8, SearchMode::sequence);
    REQUIRE(r.first.has_value());
    const auto& ce = *r.first;
    CHECK(ce.n == 5);
    CHECK(ce.sequence == DegreeSequence{4, 3, 3, 3, 3});
    CHECK(ce.value == irr_t_of_sequence(ce.sequence));
    CHECK(ce.value < ce.bound);
    CHECK(ce.bound == 6);
    CHECK_FALSE(ce.sequence.is_constant());
    REQUIRE(ce.witness.has_value());
    CHECK(is_connected(*ce.witness));
    CHECK(degree_sequence(*ce.witness) == ce.sequence);
}

TEST_CASE("sequence and graph modes agree on minima") {
    const auto seq = check_conjecture(shared_catalog(), 1, 8, SearchMode::sequence);
    const auto graph = check_conjecture(shared_catalog(), 1, 8, SearchMode::graph);
    REQUIRE(seq.levels.size() == graph.levels.size());
    for (std::size_t i = 0; i < seq.levels.size(); ++i) {
        CHECK(seq.levels[i].min_nonregular == graph.levels[i].min_nonregular);
        CHECK(seq.levels[i].minimizers == graph.levels[i].minimizers);
    }
    REQUIRE(graph.first.has_value());
    CHECK(graph.first->sequence == seq.first->sequence);
}

TEST_CASE("family names") {
    CHECK(to_string(Family::bicyclic_infinity_l2plus) == "BicyclicInfinityL2plus");
    CHECK(family_from_string("bplus") == Family::bicyclic_infinity_l1);
    CHECK(family_from_string("BicyclicTheta") == Family::bicyclic_theta);
    CHECK_FALSE(family_from_string("forest").has_value());
}
