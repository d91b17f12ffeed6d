#include "irrsub/strength.hpp"

#include <algorithm>
#include <map>

namespace irrsub {

edge_weighting weighting_from_subgraph(const multigraph& base, int s, const spanning_subgraph& h) {
    require(s >= 1, errc::invalid_params, "s >= 1");
    const multigraph& host = h.host();
    require(host.vertex_count() == base.vertex_count(), errc::host_mismatch,
            "blow-up vertex count");
    require(host.edge_count() == base.edge_count() * s, errc::host_mismatch,
            "blow-up edge count");
    for (int e = 0; e < base.edge_count(); ++e)
        for (int j = 0; j < s; ++j) {
            const auto& copy = host.edge(s * e + j);
            bool ok = (copy.u == base.edge(e).u && copy.v == base.edge(e).v) ||
                      (copy.u == base.edge(e).v && copy.v == base.edge(e).u);
            require(ok && copy.alive, errc::host_mismatch, "blow-up edge layout");
        }

    edge_weighting w;
    w.s = s;
    w.weights.resize(base.edge_count());
    w.weighted_degrees.assign(base.vertex_count(), 0);
    for (int e = 0; e < base.edge_count(); ++e) {
        int inside = 0;
        for (int j = 0; j < s; ++j)
            if (h.member(s * e + j)) ++inside;
        w.weights[e] = inside + 1;
        w.weighted_degrees[base.edge(e).u] += w.weights[e];
        w.weighted_degrees[base.edge(e).v] += w.weights[e];
    }
    return w;
}

distinct_report verify_distinct(const edge_weighting& w) {
    distinct_report rep;
    std::map<int64_t, std::vector<int>> by_degree;
    for (int v = 0; v < (int)w.weighted_degrees.size(); ++v)
        by_degree[w.weighted_degrees[v]].push_back(v);
    for (auto& [deg, verts] : by_degree)
        if (verts.size() > 1)
            rep.duplicates.insert(rep.duplicates.end(), verts.begin(), verts.end());
    std::sort(rep.duplicates.begin(), rep.duplicates.end());
    rep.distinct = rep.duplicates.empty();
    return rep;
}

} // namespace irrsub
