#include "irrsub/multigraph.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace irrsub {

multigraph multigraph::build(int num_vertices, const std::vector<std::pair<int, int>>& edge_list) {
    require(num_vertices >= 0, errc::invalid_params, "negative vertex count");
    multigraph g;
    g.vertex_alive_.assign(num_vertices, 1);
    g.live_vertices_ = num_vertices;
    g.deg_.assign(num_vertices, 0);

    std::vector<int> deg(num_vertices, 0);
    for (size_t i = 0; i < edge_list.size(); ++i) {
        auto [u, v] = edge_list[i];
        require(u >= 0 && u < num_vertices && v >= 0 && v < num_vertices,
                errc::vertex_out_of_range, "edge " + std::to_string(i));
        require(u != v, errc::loop_edge, "edge " + std::to_string(i));
        ++deg[u];
        ++deg[v];
    }
    int stride = 1;
    for (int v = 0; v < num_vertices; ++v) stride = std::max(stride, deg[v]);
    g.stride_ = stride;
    g.inc_.assign((size_t)num_vertices * stride, -1);

    g.edges_.reserve(edge_list.size());
    g.pos_.reserve(edge_list.size());
    for (auto [u, v] : edge_list) {
        g.edges_.push_back({u, v, true});
        g.pos_.push_back({-1, -1});
        g.link_incidence((int)g.edges_.size() - 1);
        ++g.live_edges_;
    }
    return g;
}

void multigraph::grow_stride(int want) {
    int ns = std::max(want, stride_ * 2);
    std::vector<int> slab((size_t)vertex_count() * ns, -1);
    for (int v = 0; v < vertex_count(); ++v)
        for (int j = 0; j < deg_[v]; ++j) slab[(size_t)v * ns + j] = inc_[(size_t)v * stride_ + j];
    inc_ = std::move(slab);
    stride_ = ns;
}

std::optional<int> multigraph::regularity() const {
    int d = -1;
    for (int v = 0; v < vertex_count(); ++v) {
        if (!vertex_alive_[v]) continue;
        if (d < 0)
            d = degree(v);
        else if (degree(v) != d)
            return std::nullopt;
    }
    if (d < 0) return std::nullopt;
    return d;
}

int multigraph::pair_multiplicity(int u, int v) const {
    int c = 0;
    for (int e : incident(u))
        if (other_end(e, u) == v) ++c;
    return c;
}

void multigraph::link_incidence(int e) {
    auto& r = edges_[e];
    if (deg_[r.u] == stride_ || deg_[r.v] == stride_)
        grow_stride(stride_ + 1);
    pos_[e][0] = deg_[r.u];
    inc_[(size_t)r.u * stride_ + deg_[r.u]++] = e;
    pos_[e][1] = deg_[r.v];
    inc_[(size_t)r.v * stride_ + deg_[r.v]++] = e;
}

void multigraph::unlink_incidence(int e) {
    auto& r = edges_[e];
    for (int side = 0; side < 2; ++side) {
        int w = side == 0 ? r.u : r.v;
        int p = pos_[e][side];
        int* seg = inc_.data() + (size_t)w * stride_;
        int moved = seg[--deg_[w]];
        seg[p] = moved;
        if (moved != e) {
            if (edges_[moved].u == w)
                pos_[moved][0] = p;
            else
                pos_[moved][1] = p;
        }
        pos_[e][side] = -1;
    }
}

int multigraph::add_vertex() {
    vertex_alive_.push_back(1);
    deg_.push_back(0);
    inc_.resize(inc_.size() + stride_, -1);
    ++live_vertices_;
    return vertex_count() - 1;
}

void multigraph::revive_vertex(int v) {
    require(v >= 0 && v < vertex_count(), errc::vertex_out_of_range, std::to_string(v));
    require(!vertex_alive_[v], errc::invalid_params, "vertex already alive");
    vertex_alive_[v] = 1;
    ++live_vertices_;
}

void multigraph::kill_vertex(int v) {
    require(vertex_alive(v), errc::vertex_out_of_range, std::to_string(v));
    require(deg_[v] == 0, errc::invalid_params, "vertex has live incident edges");
    vertex_alive_[v] = 0;
    --live_vertices_;
}

int multigraph::add_edge(int u, int v) {
    require(vertex_alive(u) && vertex_alive(v), errc::vertex_out_of_range, "add_edge");
    require(u != v, errc::loop_edge, "add_edge");
    edges_.push_back({u, v, true});
    pos_.push_back({-1, -1});
    int e = (int)edges_.size() - 1;
    link_incidence(e);
    ++live_edges_;
    return e;
}

void multigraph::revive_edge(int e) {
    require(e >= 0 && e < edge_count(), errc::dead_edge, std::to_string(e));
    auto& r = edges_[e];
    require(!r.alive, errc::invalid_params, "edge already alive");
    require(vertex_alive(r.u) && vertex_alive(r.v), errc::vertex_out_of_range, "revive_edge");
    r.alive = true;
    link_incidence(e);
    ++live_edges_;
}

void multigraph::kill_edge(int e) {
    require(edge_alive(e), errc::dead_edge, std::to_string(e));
    unlink_incidence(e);
    edges_[e].alive = false;
    --live_edges_;
}

std::pair<int, int> cubic_op_record::added_endpoints(int i) const {
    int x = anchors[0], y = anchors[1], z = anchors[2], w = anchors[3];
    int u = new_vertices[0], v = new_vertices[1];
    if (kind == cubic_op::type1) {
        switch (i) {
            case 0: return {x, u};
            case 1: return {u, v};
            case 2: return {u, v};
            case 3: return {v, y};
        }
    } else {
        switch (i) {
            case 0: return {x, u};
            case 1: return {u, y};
            case 2: return {z, v};
            case 3: return {v, w};
            case 4: return {u, v};
        }
    }
    fail(errc::malformed_record, "added edge slot out of range");
}

namespace {

bool same_pair(const edge_rec& r, int a, int b) {
    return (r.u == a && r.v == b) || (r.u == b && r.v == a);
}

// id must be either the next fresh vertex id or a tombstoned one
void materialize_vertex(multigraph& g, int id) {
    if (id == g.vertex_count()) {
        g.add_vertex();
    } else if (id >= 0 && id < g.vertex_count() && !g.vertex_alive(id)) {
        g.revive_vertex(id);
    } else {
        fail(errc::malformed_record, "vertex id " + std::to_string(id) + " not fresh or dead");
    }
}

void materialize_edge(multigraph& g, int id, int u, int v) {
    if (id == g.edge_count()) {
        g.add_edge(u, v);
    } else if (id >= 0 && id < g.edge_count() && !g.edge_alive(id)) {
        require(same_pair(g.edge(id), u, v), errc::malformed_record,
                "revived edge endpoints differ from record");
        g.revive_edge(id);
    } else {
        fail(errc::malformed_record, "edge id " + std::to_string(id) + " not fresh or dead");
    }
}

} // namespace

void expand_pair(multigraph& g, const cubic_op_record& rec) {
    int x = rec.anchors[0], y = rec.anchors[1], z = rec.anchors[2], w = rec.anchors[3];
    require(g.edge_alive(rec.removed_edges[0]), errc::malformed_record, "removed edge not live");
    require(same_pair(g.edge(rec.removed_edges[0]), x, y), errc::malformed_record,
            "removed edge does not join the anchors");
    if (rec.kind == cubic_op::type2) {
        require(g.edge_alive(rec.removed_edges[1]), errc::malformed_record, "removed edge not live");
        require(rec.removed_edges[1] != rec.removed_edges[0], errc::malformed_record,
                "removed edges must be distinct");
        require(same_pair(g.edge(rec.removed_edges[1]), z, w), errc::malformed_record,
                "removed edge does not join the anchors");
    }
    // validate everything before the first mutation
    int fresh_v = 0;
    for (int id : rec.new_vertices) {
        if (id == g.vertex_count() + fresh_v)
            ++fresh_v;
        else
            require(id >= 0 && id < g.vertex_count() && !g.vertex_alive(id),
                    errc::malformed_record, "vertex id not fresh or dead");
    }
    int fresh_e = 0;
    for (int i = 0; i < rec.added_edge_count(); ++i) {
        int id = rec.added_edges[i];
        for (int j = 0; j < i; ++j)
            require(rec.added_edges[j] != id, errc::malformed_record, "duplicate added edge id");
        if (id == g.edge_count() + fresh_e) {
            ++fresh_e;
        } else {
            require(id >= 0 && id < g.edge_count() && !g.edge_alive(id), errc::malformed_record,
                    "edge id not fresh or dead");
            auto [a, b] = rec.added_endpoints(i);
            require(same_pair(g.edge(id), a, b), errc::malformed_record,
                    "revived edge endpoints differ from record");
        }
    }

    for (int i = 0; i < rec.removed_edge_count(); ++i) g.kill_edge(rec.removed_edges[i]);
    materialize_vertex(g, rec.new_vertices[0]);
    materialize_vertex(g, rec.new_vertices[1]);
    for (int i = 0; i < rec.added_edge_count(); ++i) {
        auto [a, b] = rec.added_endpoints(i);
        materialize_edge(g, rec.added_edges[i], a, b);
    }
}

void contract_pair(multigraph& g, const cubic_op_record& rec) {
    int u = rec.new_vertices[0], v = rec.new_vertices[1];
    require(g.vertex_alive(u) && g.vertex_alive(v), errc::malformed_record, "record vertices not live");
    for (int i = 0; i < rec.added_edge_count(); ++i) {
        int e = rec.added_edges[i];
        auto [a, b] = rec.added_endpoints(i);
        require(g.edge_alive(e), errc::malformed_record, "added edge not live");
        require(same_pair(g.edge(e), a, b), errc::malformed_record, "added edge endpoints mismatch");
        for (int j = 0; j < i; ++j)
            require(rec.added_edges[j] != e, errc::malformed_record, "duplicate added edge id");
    }
    require(g.degree(u) == 3 && g.degree(v) == 3, errc::malformed_record,
            "record vertices do not have the operation neighborhood");
    int fresh_e = 0;
    for (int i = 0; i < rec.removed_edge_count(); ++i) {
        int id = rec.removed_edges[i];
        if (id == g.edge_count() + fresh_e) {
            ++fresh_e;
        } else {
            require(id >= 0 && id < g.edge_count() && !g.edge_alive(id), errc::malformed_record,
                    "edge id not fresh or dead");
            require(same_pair(g.edge(id), rec.anchors[2 * i], rec.anchors[2 * i + 1]),
                    errc::malformed_record, "revived edge endpoints differ from record");
        }
    }

    for (int i = 0; i < rec.added_edge_count(); ++i) g.kill_edge(rec.added_edges[i]);
    g.kill_vertex(u);
    g.kill_vertex(v);
    materialize_edge(g, rec.removed_edges[0], rec.anchors[0], rec.anchors[1]);
    if (rec.kind == cubic_op::type2)
        materialize_edge(g, rec.removed_edges[1], rec.anchors[2], rec.anchors[3]);
}

cubic_op_record make_type1_record(const multigraph& g, int edge_xy) {
    require(g.edge_alive(edge_xy), errc::dead_edge, std::to_string(edge_xy));
    cubic_op_record rec;
    rec.kind = cubic_op::type1;
    rec.anchors = {g.edge(edge_xy).u, g.edge(edge_xy).v, -1, -1};
    rec.new_vertices = {g.vertex_count(), g.vertex_count() + 1};
    rec.removed_edges = {edge_xy, -1};
    int e0 = g.edge_count();
    rec.added_edges = {e0, e0 + 1, e0 + 2, e0 + 3, -1};
    return rec;
}

cubic_op_record make_type2_record(const multigraph& g, int edge_xy, int edge_zw) {
    require(g.edge_alive(edge_xy) && g.edge_alive(edge_zw), errc::dead_edge, "make_type2_record");
    require(edge_xy != edge_zw, errc::invalid_params, "edges must be distinct");
    cubic_op_record rec;
    rec.kind = cubic_op::type2;
    rec.anchors = {g.edge(edge_xy).u, g.edge(edge_xy).v, g.edge(edge_zw).u, g.edge(edge_zw).v};
    rec.new_vertices = {g.vertex_count(), g.vertex_count() + 1};
    rec.removed_edges = {edge_xy, edge_zw};
    int e0 = g.edge_count();
    rec.added_edges = {e0, e0 + 1, e0 + 2, e0 + 3, e0 + 4};
    return rec;
}

} // namespace irrsub
