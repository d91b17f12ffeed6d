#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "irrsub/adjust.hpp"
#include "irrsub/generators.hpp"

namespace test_util {

using namespace irrsub;

inline bool is_connected(const multigraph& g) {
    int start = -1;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.vertex_alive(v)) {
            start = v;
            break;
        }
    if (start < 0) return true;
    std::vector<uint8_t> seen(g.vertex_count(), 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : g.incident(v)) {
            int w = g.other_end(e, v);
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == g.live_vertex_count();
}

namespace detail {

inline void cubic_enum_rec(int n, size_t pi, const std::vector<std::pair<int, int>>& pairs,
                           std::vector<int>& mult, std::vector<int>& rem,
                           std::vector<multigraph>& out) {
    if (pi == pairs.size()) {
        for (int v = 0; v < n; ++v)
            if (rem[v] != 0) return;
        std::vector<std::pair<int, int>> edges;
        for (size_t i = 0; i < pairs.size(); ++i)
            for (int t = 0; t < mult[i]; ++t) edges.push_back(pairs[i]);
        auto g = multigraph::build(n, edges);
        if (is_connected(g)) out.push_back(std::move(g));
        return;
    }
    auto [a, b] = pairs[pi];
    if (a > 0 && b == a + 1 && rem[a - 1] != 0) return; // row a-1 is settled
    int cap = std::min({3, rem[a], rem[b]});
    for (int t = 0; t <= cap; ++t) {
        mult[pi] = t;
        rem[a] -= t;
        rem[b] -= t;
        cubic_enum_rec(n, pi + 1, pairs, mult, rem, out);
        rem[a] += t;
        rem[b] += t;
    }
}

} // namespace detail

// all labeled connected cubic multigraphs on n vertices (n even, small)
inline std::vector<multigraph> connected_cubic_multigraphs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
    std::vector<int> mult(pairs.size(), 0), rem(n, 3);
    std::vector<multigraph> out;
    detail::cubic_enum_rec(n, 0, pairs, mult, rem, out);
    return out;
}

// canonical view of the live edge multiset (with ids)
inline std::vector<std::array<int, 3>> serialize_live(const multigraph& g) {
    std::vector<std::array<int, 3>> out;
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.edge_alive(e))
            out.push_back({e, std::min(g.edge(e).u, g.edge(e).v), std::max(g.edge(e).u, g.edge(e).v)});
    return out;
}

inline spanning_subgraph subgraph_from_mask(const multigraph& g, uint64_t mask) {
    spanning_subgraph h(g);
    for (int e = 0; e < g.edge_count(); ++e)
        if (mask >> e & 1) h.toggle_edge(e);
    return h;
}

// random valid multi-star of h, if any exists near a randomly chosen center
inline std::optional<multi_star> random_multistar(const spanning_subgraph& h,
                                                  std::mt19937_64& rng) {
    const multigraph& g = h.host();
    for (int tries = 0; tries < 50; ++tries) {
        int v = (int)(rng() % g.vertex_count());
        if (!g.vertex_alive(v)) continue;
        bool del = rng() & 1;
        std::vector<std::pair<int, int>> side; // (leaf, edge)
        for (int e : g.incident(v))
            if (h.member(e) == del) side.push_back({g.other_end(e, v), e});
        if (side.empty()) continue;
        multi_star star;
        star.center = v;
        star.center_h_degree = h.h_degree(v);
        star.side = del ? star_side::in_h : star_side::in_complement;
        for (auto [leaf, e] : side) {
            if (rng() % 2) continue;
            auto it = std::find_if(star.leaves.begin(), star.leaves.end(),
                                   [&](const star_leaf& l) { return l.vertex == leaf; });
            if (it == star.leaves.end())
                star.leaves.push_back({leaf, h.h_degree(leaf), {e}});
            else
                it->edges.push_back(e);
        }
        if (star.leaves.empty()) continue;
        return star;
    }
    return std::nullopt;
}

} // namespace test_util
