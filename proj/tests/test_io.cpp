#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "irrsub/io.hpp"

using namespace irrsub;
using test_util::serialize_live;
using test_util::subgraph_from_mask;

TEST_CASE("graph serialization is bit-exact") {
    auto k23 = make_k2k(3);
    CHECK(serialize_graph(k23) == "p mgraph 2 3\ne 0 1\ne 0 1\ne 0 1\n");
    auto parsed = parse_graph(serialize_graph(k23));
    CHECK(serialize_live(parsed) == serialize_live(k23));
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_graph("p mgraph 2 1\ne 0 0\n"), error);   // loop
    CHECK_THROWS_AS(parse_graph("p mgraph 2 1\ne 0 7\n"), error);   // range
    CHECK_THROWS_AS(parse_graph("p graph 2 1\ne 0 1\n"), error);    // bad magic
    CHECK_THROWS_AS(parse_graph("p mgraph 2 2\ne 0 1\n"), error);   // count mismatch
    CHECK_THROWS_AS(parse_graph(""), error);
    try {
        parse_graph("p mgraph 2 1\ne 0 0\n");
    } catch (const error& e) {
        CHECK(e.code == errc::parse_error);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("round trips on random graphs") {
    std::mt19937_64 rng(61);
    for (int it = 0; it < 100; ++it) {
        int n = 2 + (int)(rng() % 20);
        int d = 1 + (int)(rng() % 4);
        if (n * d % 2) continue;
        auto g = random_regular(n, d, rng());
        auto text = serialize_graph(g);
        CHECK(serialize_graph(parse_graph(text)) == text);
    }
}

TEST_CASE("subgraph files") {
    auto g = make_cycle(6);
    auto h = subgraph_from_mask(g, 0b101001);
    auto text = serialize_subgraph(h);
    CHECK(text == "s 3\n0 3 5\n");
    auto ids = parse_subgraph(text, g.edge_count());
    CHECK(ids == std::vector<int>{0, 3, 5});
    spanning_subgraph h2(g);
    h2.set_members(ids);
    CHECK(h2.member_edges() == h.member_edges());

    CHECK_THROWS_AS(parse_subgraph("s 2\n3 1\n", 6), error);  // not ascending
    CHECK_THROWS_AS(parse_subgraph("s 1\n9\n", 6), error);    // out of range
    CHECK_THROWS_AS(parse_subgraph("s 2\n1\n", 6), error);    // count mismatch

    spanning_subgraph none(g);
    CHECK(serialize_subgraph(none) == "s 0\n\n");
    CHECK(parse_subgraph("s 0\n\n", 6).empty());
}

TEST_CASE("degree report") {
    auto k23 = make_k2k(3);
    spanning_subgraph h(k23);
    h.toggle_edge(0);
    CHECK(degree_report(h) == "k 0 0\nk 1 2\nk 2 0\nk 3 0\nanorm 6 scale 4\n");
}
