#include "irrsub/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace irrsub {

multigraph make_k2k(int k) {
    require(k >= 1, errc::invalid_params, "k2k needs k >= 1");
    std::vector<std::pair<int, int>> edges(k, {0, 1});
    return multigraph::build(2, edges);
}

multigraph make_complete_bipartite(int d) {
    require(d >= 1, errc::invalid_params, "complete bipartite needs d >= 1");
    std::vector<std::pair<int, int>> edges;
    edges.reserve((size_t)d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) edges.push_back({i, d + j});
    return multigraph::build(2 * d, edges);
}

multigraph make_cycle(int n) {
    require(n >= 2, errc::invalid_params, "cycle needs n >= 2");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n);
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return multigraph::build(n, edges);
}

multigraph make_petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5});
    for (int i = 0; i < 5; ++i) edges.push_back({5 + i, 5 + (i + 2) % 5});
    for (int i = 0; i < 5; ++i) edges.push_back({i, 5 + i});
    return multigraph::build(10, edges);
}

multigraph make_k4() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) edges.push_back({i, j});
    return multigraph::build(4, edges);
}

multigraph make_doubled(const multigraph& base, int s) {
    require(s >= 1, errc::invalid_params, "blow-up needs s >= 1");
    require(base.live_edge_count() == base.edge_count(), errc::invalid_params,
            "blow-up base must have no dead edges");
    std::vector<std::pair<int, int>> edges;
    edges.reserve((size_t)base.edge_count() * s);
    for (int e = 0; e < base.edge_count(); ++e)
        for (int j = 0; j < s; ++j) edges.push_back({base.edge(e).u, base.edge(e).v});
    return multigraph::build(base.vertex_count(), edges);
}

multigraph make_disjoint_union(const multigraph& g, int copies) {
    require(copies >= 1, errc::invalid_params, "union needs copies >= 1");
    require(g.live_edge_count() == g.edge_count(), errc::invalid_params,
            "union base must have no dead edges");
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    edges.reserve((size_t)g.edge_count() * copies);
    for (int c = 0; c < copies; ++c)
        for (int e = 0; e < g.edge_count(); ++e)
            edges.push_back({g.edge(e).u + c * n, g.edge(e).v + c * n});
    return multigraph::build(n * copies, edges);
}

multigraph random_regular(int n, int d, uint64_t seed) {
    require(n >= 2 && d >= 1, errc::invalid_params, "random_regular needs n >= 2, d >= 1");
    require((int64_t)n * d % 2 == 0, errc::invalid_params, "n*d must be even");

    std::mt19937_64 rng(seed);
    std::vector<int> stubs((size_t)n * d);
    for (int v = 0; v < n; ++v)
        for (int j = 0; j < d; ++j) stubs[(size_t)v * d + j] = v;
    std::shuffle(stubs.begin(), stubs.end(), rng);

    const size_t pairs = stubs.size() / 2;
    auto loop_pairs = [&] {
        std::vector<size_t> bad;
        for (size_t i = 0; i < pairs; ++i)
            if (stubs[2 * i] == stubs[2 * i + 1]) bad.push_back(i);
        return bad;
    };

    auto bad = loop_pairs();
    size_t stuck = 0;
    for (int attempt = 0; !bad.empty() && attempt < 400; ++attempt) {
        std::vector<size_t> pool = bad;
        // a pool of identical stubs can never be fixed by re-pairing alone;
        // widen it with random extra pairs while progress stalls
        size_t extra = stuck;
        while (extra-- > 0 && pool.size() < pairs) {
            std::uniform_int_distribution<size_t> pick(0, pairs - 1);
            size_t p = pick(rng);
            if (std::find(pool.begin(), pool.end(), p) == pool.end()) pool.push_back(p);
        }
        std::vector<int> loose;
        for (size_t p : pool) {
            loose.push_back(stubs[2 * p]);
            loose.push_back(stubs[2 * p + 1]);
        }
        std::shuffle(loose.begin(), loose.end(), rng);
        for (size_t i = 0; i < pool.size(); ++i) {
            stubs[2 * pool[i]] = loose[2 * i];
            stubs[2 * pool[i] + 1] = loose[2 * i + 1];
        }
        auto nb = loop_pairs();
        stuck = nb.size() >= bad.size() ? stuck + 1 : 0;
        bad = std::move(nb);
    }
    require(bad.empty(), errc::retry_exhausted, "could not repair loops");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(pairs);
    for (size_t i = 0; i < pairs; ++i) edges.push_back({stubs[2 * i], stubs[2 * i + 1]});
    return multigraph::build(n, edges);
}

multigraph generate(const generator_spec& spec) {
    using fam = generator_spec::family;
    switch (spec.fam) {
        case fam::k2k: return make_k2k(spec.a);
        case fam::complete_bipartite: return make_complete_bipartite(spec.a);
        case fam::cycle: return make_cycle(spec.a);
        case fam::petersen: return make_petersen();
        case fam::k4: return make_k4();
        case fam::doubled:
            require(spec.base != nullptr, errc::invalid_params, "doubled needs a base graph");
            return make_doubled(*spec.base, spec.a);
        case fam::disjoint_union:
            require(spec.base != nullptr, errc::invalid_params, "union needs a base graph");
            return make_disjoint_union(*spec.base, spec.a);
        case fam::random_regular: return random_regular(spec.a, spec.b, spec.seed);
    }
    fail(errc::invalid_params, "unknown family");
}

} // namespace irrsub
