#include "irrsub/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

namespace { inline int64_t iabs(int64_t x) { return x < 0 ? -x : x; } }

namespace irrsub {

namespace {

struct enumerator {
    const multigraph* g;
    int d;
    int64_t n;
    int m;
    std::vector<int> deg;
    std::vector<int64_t> cnt; // vertices per degree

    explicit enumerator(const multigraph& graph) : g(&graph) {
        auto reg = graph.regularity();
        require(reg.has_value(), errc::not_regular, "oracle needs a regular host");
        require(graph.live_edge_count() == graph.edge_count(), errc::invalid_params,
                "oracle needs a host without dead edges");
        require(graph.edge_count() <= oracle_edge_budget, errc::too_large,
                "enumeration budget is 26 edges");
        d = *reg;
        n = graph.live_vertex_count();
        m = graph.edge_count();
        deg.assign(graph.vertex_count(), 0);
        cnt.assign(d + 1, 0);
        cnt[0] = n;
    }

    void toggle(int e, bool add) {
        for (int v : {g->edge(e).u, g->edge(e).v}) {
            --cnt[deg[v]];
            deg[v] += add ? 1 : -1;
            ++cnt[deg[v]];
        }
    }

    int64_t norm() const {
        int64_t best = 0;
        for (int k = 0; k <= d; ++k)
            best = std::max(best, iabs((int64_t)(d + 1) * cnt[k] - n));
        return best;
    }

    scaled_a a_vec() const { return a_from_profile(d, cnt); }

    static std::vector<int> decode(uint64_t mask) {
        std::vector<int> ids;
        for (int e = 0; mask; ++e, mask >>= 1)
            if (mask & 1) ids.push_back(e);
        return ids;
    }
};

} // namespace

oracle_result oracle_best(const multigraph& g) {
    enumerator en(g);
    oracle_result out;
    out.subgraph_count = uint64_t(1) << en.m;
    out.best_scaled_inf_norm = en.norm();
    uint64_t best_mask = 0, gray = 0;
    const uint64_t total = out.subgraph_count;
    for (uint64_t i = 1; i < total; ++i) {
        int bit = std::countr_zero(i);
        bool add = !(gray & (uint64_t(1) << bit));
        gray ^= uint64_t(1) << bit;
        en.toggle(bit, add);
        int64_t v = en.norm();
        if (v < out.best_scaled_inf_norm ||
            (v == out.best_scaled_inf_norm && gray < best_mask)) {
            out.best_scaled_inf_norm = v;
            best_mask = gray;
        }
    }
    out.witness = enumerator::decode(best_mask);
    return out;
}

std::optional<std::vector<int>> oracle_state_exists(
    const multigraph& g, const std::function<bool(const scaled_a&)>& pred) {
    enumerator en(g);
    if (pred(en.a_vec())) return std::vector<int>{};
    uint64_t gray = 0;
    const uint64_t total = uint64_t(1) << en.m;
    for (uint64_t i = 1; i < total; ++i) {
        int bit = std::countr_zero(i);
        bool add = !(gray & (uint64_t(1) << bit));
        gray ^= uint64_t(1) << bit;
        en.toggle(bit, add);
        if (pred(en.a_vec())) return enumerator::decode(gray);
    }
    return std::nullopt;
}

} // namespace irrsub
