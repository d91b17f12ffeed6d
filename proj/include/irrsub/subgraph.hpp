#pragma once

#include <cstdint>
#include <vector>

#include "irrsub/multigraph.hpp"

namespace irrsub {

struct toggle_report {
    int edge;
    int u, v;
    int u_before, v_before;
    int u_after, v_after;
};

// Spanning-subgraph membership over a d-regular host. Storage is a raw
// membership bit per edge plus raw per-vertex degrees; the polarity flag
// reinterprets the whole state as the complement in O(1). Effective views
// (member, h_degree, profile) assume the host is d-regular at query time;
// the cubic machinery may leave it briefly irregular mid-operation.
class spanning_subgraph {
public:
    explicit spanning_subgraph(const multigraph& host); // not_regular if host is irregular

    const multigraph& host() const { return *host_; }
    int degree_cap() const { return d_; }
    bool polarity() const { return polarity_; }

    bool raw_member(int e) const { return raw_member_[e] != 0; }
    bool member(int e) const { return (raw_member_[e] != 0) != polarity_; }
    int raw_degree(int v) const { return raw_deg_[v]; }
    int h_degree(int v) const { return polarity_ ? d_ - raw_deg_[v] : raw_deg_[v]; }

    toggle_report toggle_edge(int e); // dead_edge if e is dead
    void flip_polarity();             // O(1); host must be regular for the view to be meaningful

    // m(H,k) for k = 0..d, effective
    std::vector<int64_t> profile() const;
    const std::vector<int64_t>& raw_profile() const { return raw_count_; }

    std::vector<int> member_edges() const; // effective members, ascending ids
    void set_members(const std::vector<int>& ids); // resets polarity to false

    // host-mutation hooks used by the cubic solver
    void notify_vertex_added(int v);
    void notify_vertex_removed(int v);
    void detach_edge(int e);                    // call before g.kill_edge
    void attach_edge(int e, bool effective_member); // call after g.add_edge / revive_edge

private:
    void bump_raw_degree(int v, int delta);

    const multigraph* host_;
    int d_;
    bool polarity_ = false;
    std::vector<uint8_t> raw_member_;
    std::vector<int> raw_deg_;
    std::vector<int64_t> raw_count_; // #vertices with raw degree k, k = 0..d
};

} // namespace irrsub
