#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "irrsub/errors.hpp"

namespace irrsub {

struct edge_rec {
    int u = -1;
    int v = -1;
    bool alive = false;
};

// Loop-free multigraph with stable ids. Parallel edges are distinct records.
// Dead edges/vertices are tombstoned; ids are never reused.
class multigraph {
public:
    multigraph() = default;

    static multigraph build(int num_vertices, const std::vector<std::pair<int, int>>& edge_list);

    int vertex_count() const { return (int)vertex_alive_.size(); }
    int edge_count() const { return (int)edges_.size(); }
    int live_vertex_count() const { return live_vertices_; }
    int live_edge_count() const { return live_edges_; }

    bool vertex_alive(int v) const { return v >= 0 && v < vertex_count() && vertex_alive_[v]; }
    bool edge_alive(int e) const { return e >= 0 && e < edge_count() && edges_[e].alive; }
    const edge_rec& edge(int e) const { return edges_[e]; }
    int other_end(int e, int v) const { return edges_[e].u == v ? edges_[e].v : edges_[e].u; }

    // live incident edge ids; order is mutation-history dependent but deterministic
    std::span<const int> incident(int v) const {
        return {inc_.data() + (size_t)v * stride_, (size_t)deg_[v]};
    }
    int degree(int v) const { return deg_[v]; }

    // d if every live vertex has degree d, none otherwise
    std::optional<int> regularity() const;

    // multiplicity of the (u,v) pair among live edges; O(deg)
    int pair_multiplicity(int u, int v) const;

    int add_vertex();
    void revive_vertex(int v);
    void kill_vertex(int v); // requires no live incident edges
    int add_edge(int u, int v);
    void revive_edge(int e);
    void kill_edge(int e);

private:
    void link_incidence(int e);
    void unlink_incidence(int e);
    void grow_stride(int want);

    std::vector<edge_rec> edges_;
    // fixed-stride incidence slab: slots [v*stride_, v*stride_ + deg_[v])
    std::vector<int> inc_;
    std::vector<int> deg_;
    int stride_ = 1;
    std::vector<std::array<int, 2>> pos_; // position of e within inc_[u] / inc_[v]
    std::vector<uint8_t> vertex_alive_;
    int live_edges_ = 0;
    int live_vertices_ = 0;
};

// One generation step of the cubic decomposition (forward direction G -> G').
// Type I : remove xy; add vertices u,v; add edges xu, uv, uv, vy.
// Type II: remove xy, zw; add vertices u,v; add edges xu, uy, zv, vw, uv.
enum class cubic_op { type1, type2 };

struct cubic_op_record {
    cubic_op kind = cubic_op::type1;
    std::array<int, 4> anchors{-1, -1, -1, -1};      // x, y, z, w (z,w unused for type1)
    std::array<int, 2> new_vertices{-1, -1};         // u, v
    std::array<int, 2> removed_edges{-1, -1};        // e_xy, e_zw (unused slot -1)
    std::array<int, 5> added_edges{-1, -1, -1, -1, -1}; // type1: xu,uv,uv,vy ; type2: xu,uy,zv,vw,uv

    int added_edge_count() const { return kind == cubic_op::type1 ? 4 : 5; }
    int removed_edge_count() const { return kind == cubic_op::type1 ? 1 : 2; }
    // endpoints of added edge slot i, given the record's vertices
    std::pair<int, int> added_endpoints(int i) const;
};

// Apply the record forward (G -> G'). Referenced ids must be fresh (next unused)
// or tombstoned; tombstoned ids are revived, which makes replay exact.
void expand_pair(multigraph& g, const cubic_op_record& rec);

// Apply the record backward (G' -> G). The record's new vertices must be live
// with exactly the operation-layout neighborhoods given by added_edges.
void contract_pair(multigraph& g, const cubic_op_record& rec);

// Record factories allocating fresh ids for a forward application on g.
cubic_op_record make_type1_record(const multigraph& g, int edge_xy);
cubic_op_record make_type2_record(const multigraph& g, int edge_xy, int edge_zw);

} // namespace irrsub
