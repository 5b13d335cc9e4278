#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"

#include "irrt/enumerate.hpp"
#include "irrt/error.hpp"
#include "irrt/graph6.hpp"

using namespace irrt;

namespace {

// Straightforward encoder: build the bit string, pad, then pack.
std::string reference_encode(const Graph& g) {
    const int n = g.order();
    std::string bits;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j) ? '1' : '0');
    }
    while (bits.size() % 6 != 0) bits.push_back('0');
    std::string out(1, static_cast<char>(n + 63));
    for (std::size_t k = 0; k < bits.size(); k += 6) {
        out.push_back(static_cast<char>(std::stoi(bits.substr(k, 6), nullptr, 2) + 63));
    }
    return out;
}

Graph6ErrorKind parse_error(std::string_view line) {
    try {
        parse_graph6(line);
    } catch (const Graph6Error& e) {
        return e.kind();
    }
    FAIL("expected a Graph6Error");
    return Graph6ErrorKind::empty_record;
}

std::size_t parse_error_position(std::string_view line) {
    try {
        parse_graph6(line);
    } catch (const Graph6Error& e) {
        return e.position();
    }
    return std::string::npos;
}

}  // namespace

TEST_CASE("small records") {
    CHECK(write_graph6(Graph(1)) == "@");
    CHECK(write_graph6(Graph(0)) == "?");
    CHECK(write_graph6(make_path(3)) == "Bg");
    CHECK(write_graph6(make_cycle(3)) == "Bw");
    CHECK(write_graph6(make_cycle(5)) == "Dhc");
    CHECK(parse_graph6("Bg") == make_path(3));
    CHECK(parse_graph6("@") == Graph(1));
    CHECK(parse_graph6("Dhc") == make_cycle(5));
}

TEST_CASE("encoder agrees with the reference bit packing") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        const Graph g = oracle::random_graph(rng, trial % 63, 0.5);
        CHECK(write_graph6(g) == reference_encode(g));
    }
}

TEST_CASE("malformed records") {
    CHECK(parse_error("") == Graph6ErrorKind::empty_record);
    CHECK(parse_error("~??") == Graph6ErrorKind::bad_header);
    CHECK(parse_error(" ") == Graph6ErrorKind::bad_header);
    CHECK(parse_error("B") == Graph6ErrorKind::truncated);
    CHECK(parse_error("Dh") == Graph6ErrorKind::truncated);
    CHECK(parse_error_position("Dh") == 2);
    CHECK(parse_error("Bgg") == Graph6ErrorKind::trailing_garbage);
    CHECK(parse_error_position("Bgg") == 2);
    CHECK(parse_error("@x") == Graph6ErrorKind::trailing_garbage);
    CHECK(parse_error("D h") == Graph6ErrorKind::invalid_byte);
    CHECK(parse_error_position("D h") == 1);
    // P3 uses 3 of the 6 bits; setting a padding bit is rejected.
    CHECK(parse_error("Bh") == Graph6ErrorKind::nonzero_padding);
    CHECK_THROWS_AS(write_graph6(Graph(63)), LimitError);
}

TEST_CASE("stream reading skips blank lines and reports line numbers") {
    std::istringstream in("Bg\r\n\n@\nDhc\n");
    const auto graphs = read_graph6(in);
    REQUIRE(graphs.size() == 3);
    CHECK(graphs[2] == make_cycle(5));

    std::istringstream bad("Bg\nBgg\n");
    try {
        read_graph6(bad);
        FAIL("expected a Graph6Error");
    } catch (const Graph6Error& e) {
        CHECK(e.kind() == Graph6ErrorKind::trailing_garbage);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("round trip on random labeled graphs up to 62 vertices") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> order(0, kMaxGraph6Order);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const Graph g = oracle::random_graph(rng, order(rng), density(rng));
        const std::string line = write_graph6(g);
        for (char ch : line) {
            CHECK(static_cast<unsigned char>(ch) >= 63);
            CHECK(static_cast<unsigned char>(ch) <= 126);
        }
        CHECK(parse_graph6(line) == g);
    }
}

TEST_CASE("round trip on enumerated graphs") {
    GraphCatalog catalog(1);
    for (int n = 1; n <= 8; ++n) {
        for (const auto& g : catalog.connected_all(n)) CHECK(parse_graph6(write_graph6(g)) == g);
    }
}
