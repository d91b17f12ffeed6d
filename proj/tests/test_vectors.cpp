#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "irrsub/vectors.hpp"

using namespace irrsub;
using test_util::subgraph_from_mask;

namespace {

spanning_subgraph one_edge(const multigraph& g) {
    spanning_subgraph h(g);
    h.toggle_edge(0);
    return h;
}

} // namespace

TEST_CASE("degree profiles") {
    auto k23 = make_k2k(3);
    auto h = one_edge(k23);
    CHECK(degree_profile(h) == std::vector<int64_t>{0, 2, 0, 0});

    spanning_subgraph full(k23);
    full.flip_polarity();
    CHECK(degree_profile(full) == std::vector<int64_t>{0, 0, 0, 2});

    auto c4 = make_cycle(4);
    auto hc = one_edge(c4);
    CHECK(degree_profile(hc) == std::vector<int64_t>{2, 2, 0});
}

TEST_CASE("scaled a and b vectors") {
    auto k23 = make_k2k(3);
    auto h = one_edge(k23);
    CHECK(a_scaled(h).entries == std::vector<int64_t>{-2, 6, -2, -2});
    CHECK(b_scaled(h).entries == std::vector<int64_t>{-2, 4, 2});

    auto c4 = make_cycle(4);
    auto hc = one_edge(c4);
    CHECK(a_scaled(hc).entries == std::vector<int64_t>{2, 2, -4});
    CHECK(b_scaled(hc).entries == std::vector<int64_t>{2, 4});

    // empty subgraph of any d-regular host: b~_i = (d-i+1) n
    auto pet = make_petersen();
    spanning_subgraph he(pet);
    CHECK(b_scaled(he).entries == std::vector<int64_t>{30, 20, 10});
}

TEST_CASE("improvement order") {
    scaled_b before{{-2, 4, 2}}, after{{-2, 2, 2}};
    CHECK(is_improvement(before, after) == improvement_kind::type_a);
    scaled_b b1{{0, 4, -4}}, b2{{2, -2, -4}};
    CHECK(is_improvement(b1, b2) == improvement_kind::type_b);
    CHECK(is_improvement(b1, b1) == improvement_kind::not_improvement);
    scaled_b shorter{{1, 2}};
    CHECK_THROWS_AS(is_improvement(b1, shorter), error);
}

TEST_CASE("complement vectors") {
    scaled_a a{3, 2, {-2, 6, -2, -2}};
    scaled_b b{{-2, 4, 2}};
    auto [a2, b2] = complement_vectors(a, b);
    CHECK(a2.entries == std::vector<int64_t>{-2, -2, 6, -2});
    CHECK(b2.entries == std::vector<int64_t>{-2, -4, 2});
    auto [a3, b3] = complement_vectors(a2, b2);
    CHECK(a3.entries == a.entries);
    CHECK(b3.entries == b.entries);
    // palindromic a with antisymmetric b is a fixed point
    scaled_a ap{3, 4, {4, -4, -4, 4}};
    auto bp = b_from_a(ap);
    auto [af, bf] = complement_vectors(ap, bp);
    CHECK(af.entries == ap.entries);
    CHECK(bf.entries == bp.entries);
}

TEST_CASE("complement matches an actual polarity flip") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 40; ++it) {
        int d = 2 + (int)(rng() % 5);
        int n = 4 + 2 * (int)(rng() % 5);
        if (n * d % 2) ++n;
        auto g = random_regular(n, d, rng());
        auto h = subgraph_from_mask(g, rng());
        auto [ca, cb] = complement_vectors(a_scaled(h), b_scaled(h));
        h.flip_polarity();
        CHECK(a_scaled(h).entries == ca.entries);
        CHECK(b_scaled(h).entries == cb.entries);
        CHECK(sorted_c(cb) == sorted_c(b_scaled(h)));
    }
}

TEST_CASE("norm inequality and boundary sums") {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 1000; ++it) {
        int d = 2 + (int)(rng() % 5);
        int n = 4 + 2 * (int)(rng() % 6);
        if (n * d % 2) ++n;
        auto g = random_regular(n, d, rng());
        auto h = subgraph_from_mask(g, rng());
        auto a = a_scaled(h);
        auto b = b_scaled(h);
        CHECK(inf_norm(a) <= 2 * inf_norm(b)); // scaled norm inequality
        int64_t total = 0;
        for (auto x : a.entries) total += x;
        CHECK(total == 0);
        CHECK(b_at(b, 0) == 0);
        CHECK(b_at(b, d + 1) == 0);
        // sorted C is complement-invariant
        auto [ca, cb] = complement_vectors(a, b);
        CHECK(sorted_c(b) == sorted_c(cb));
    }
}

TEST_CASE("cubic parity of the scaled a-vector") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 60; ++it) {
        int n = 4 + 2 * (int)(rng() % 6);
        auto g = random_regular(n, 3, rng());
        auto h = subgraph_from_mask(g, rng());
        int64_t want = n % 4 == 0 ? 0 : 2;
        for (auto x : a_scaled(h).entries) CHECK(((x % 4) + 4) % 4 == want);
    }
}

TEST_CASE("flip complements every effective degree") {
    std::mt19937_64 rng(67);
    for (int it = 0; it < 20; ++it) {
        int d = 2 + (int)(rng() % 4);
        int n = 4 + 2 * (int)(rng() % 5);
        if (n * d % 2) ++n;
        auto g = random_regular(n, d, rng());
        auto h = subgraph_from_mask(g, rng());
        std::vector<int> before(n);
        for (int v = 0; v < n; ++v) before[v] = h.h_degree(v);
        h.flip_polarity();
        for (int v = 0; v < n; ++v) CHECK(h.h_degree(v) == d - before[v]);
    }
}
