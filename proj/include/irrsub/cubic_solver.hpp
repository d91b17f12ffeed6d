#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "irrsub/edge_index.hpp"
#include "irrsub/vectors.hpp"

namespace irrsub {

enum class cubic_state { state0, proper, state1, state2, other };

const char* cubic_state_name(cubic_state s);

// State classification of a scaled cubic a-vector. Priorities when ranges
// overlap: state0 before proper, state1 before state2.
cubic_state classify(const scaled_a& a);

struct decomposition {
    int base_components = 0;               // m
    std::vector<cubic_op_record> ops;      // in contraction order (G -> mK2^3)
};

// Contract one pair, starting from a doubled edge when one
// exists anywhere (its component then has >= 4 vertices), else from any
// simple edge. Mutates g and returns the record.
cubic_op_record find_contraction(multigraph& g);

// Contract until only triple-edge components remain. |V|/2 = m + |ops|.
decomposition decompose(multigraph& g);

// State-0 base subgraph of an mK2^3 graph: component c of the first 4k gets
// (c mod 4) edges, the remaining r get 1, 2, 0, 3 edges in that order.
spanning_subgraph base_subgraph(const multigraph& g);

struct cubic_stats {
    uint64_t toggles = 0;
    uint64_t index_updates = 0;
    int base_components = 0;
    int64_t ops_replayed = 0;
};

// Repair machinery over one (graph, subgraph, index) triple. The graph is
// only mutated by apply_op_and_repair; repairs toggle membership only.
class cubic_ops {
public:
    cubic_ops(multigraph& g, spanning_subgraph& h, bool debug_verify = false);

    scaled_a a() const { return a_scaled(*h_); }
    cubic_state state() const { return classify(a()); }

    void proper_to_state0(); // bounded descent on a_0 + a_3, then raise a_2
    void repair_state1();    // state-1 -> proper
    void repair_state2();    // state-2 -> proper
    void apply_op_and_repair(const cubic_op_record& rec); // grow, extend, repair

    const edge_index& index() const { return idx_; }
    spanning_subgraph& subgraph() { return *h_; }
    uint64_t toggles() const { return toggles_; }

private:
    void toggle(int e);
    void toggle_star(const edge_index::star2& s);
    void kill_edge_tracked(int e);
    void materialize_vertex_tracked(int v);
    void add_edge_tracked(int id, int u, int v, bool effective_member);
    void begin_batch();
    void end_batch();
    void repair_after_extension(); // classify and dispatch the repair chain
    void debug_check() const;

    multigraph* g_;
    spanning_subgraph* h_;
    edge_index idx_;
    uint64_t toggles_ = 0;
    bool debug_verify_ = false;
    bool defer_ = false;
    std::vector<int> touched_;
};

// Cubic solver: decompose, seed the base subgraph, replay with
// repairs. Returns a state-0 subgraph; g is restored to its original edges.
std::pair<spanning_subgraph, cubic_stats> solve_cubic(multigraph& g, bool debug_verify = false);

} // namespace irrsub
