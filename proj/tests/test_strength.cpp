#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "irrsub/strength.hpp"

using namespace irrsub;
using test_util::subgraph_from_mask;

TEST_CASE("weighting from a blow-up subgraph") {
    auto base = multigraph::build(3, {{0, 1}, {0, 2}, {1, 2}});
    auto blow = make_doubled(base, 2);
    spanning_subgraph h(blow);
    h.toggle_edge(0); // both copies of edge 01
    h.toggle_edge(1);
    h.toggle_edge(2); // one copy of edge 02
    auto w = weighting_from_subgraph(base, 2, h);
    CHECK(w.weights == std::vector<int>{3, 2, 1});
    CHECK(w.weighted_degrees == std::vector<int64_t>{5, 4, 3});
    CHECK(verify_distinct(w).distinct);

    spanning_subgraph empty(blow);
    auto we = weighting_from_subgraph(base, 2, empty);
    CHECK(we.weights == std::vector<int>{1, 1, 1});
    auto rep = verify_distinct(we);
    CHECK(!rep.distinct);
    CHECK(rep.duplicates == std::vector<int>{0, 1, 2});

    spanning_subgraph full(blow);
    full.flip_polarity();
    auto wf = weighting_from_subgraph(base, 2, full);
    CHECK(wf.weights == std::vector<int>{3, 3, 3});
    for (auto deg : wf.weighted_degrees) CHECK(deg == 3 * 2);
}

TEST_CASE("host mismatch is rejected") {
    auto base = make_cycle(3);
    auto wrong = make_cycle(4);
    spanning_subgraph h(wrong);
    CHECK_THROWS_AS(weighting_from_subgraph(base, 2, h), error);
}

TEST_CASE("distinctness iff every degree class has at most one vertex") {
    std::mt19937_64 rng(59);
    for (int it = 0; it < 100; ++it) {
        int n = 3 + (int)(rng() % 4);
        int d = 2 + (int)(rng() % 3);
        if (n * d % 2) continue;
        auto base = random_regular(n, d, rng());
        int s = 1 + (int)(rng() % 3);
        auto blow = make_doubled(base, s);
        auto h = subgraph_from_mask(blow, rng());
        auto w = weighting_from_subgraph(base, s, h);
        int64_t max_class = 0;
        for (auto c : degree_profile(h)) max_class = std::max(max_class, c);
        CHECK(verify_distinct(w).distinct == (max_class <= 1));
        // degree-shift identity: weighted degree = d + H-degree
        for (int v = 0; v < base.vertex_count(); ++v)
            CHECK(w.weighted_degrees[v] == d + h.h_degree(v));
        // weight range
        for (int weight : w.weights) {
            CHECK(weight >= 1);
            CHECK(weight <= s + 1);
        }
    }
}
