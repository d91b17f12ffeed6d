#include "irrsub/subgraph.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace irrsub {

spanning_subgraph::spanning_subgraph(const multigraph& host) : host_(&host) {
    auto d = host.regularity();
    require(d.has_value(), errc::not_regular, "spanning subgraph needs a regular host");
    d_ = *d;
    raw_member_.assign(host.edge_count(), 0);
    raw_deg_.assign(host.vertex_count(), 0);
    raw_count_.assign(d_ + 1, 0);
    raw_count_[0] = host.live_vertex_count();
}

void spanning_subgraph::bump_raw_degree(int v, int delta) {
    --raw_count_[raw_deg_[v]];
    raw_deg_[v] += delta;
    assert(raw_deg_[v] >= 0 && raw_deg_[v] <= d_);
    ++raw_count_[raw_deg_[v]];
}

toggle_report spanning_subgraph::toggle_edge(int e) {
    require(host_->edge_alive(e), errc::dead_edge, std::to_string(e));
    const auto& r = host_->edge(e);
    toggle_report rep;
    rep.edge = e;
    rep.u = r.u;
    rep.v = r.v;
    rep.u_before = h_degree(r.u);
    rep.v_before = h_degree(r.v);
    int delta = raw_member_[e] ? -1 : +1;
    raw_member_[e] ^= 1;
    bump_raw_degree(r.u, delta);
    bump_raw_degree(r.v, delta);
    rep.u_after = h_degree(r.u);
    rep.v_after = h_degree(r.v);
    return rep;
}

void spanning_subgraph::flip_polarity() { polarity_ = !polarity_; }

std::vector<int64_t> spanning_subgraph::profile() const {
    if (!polarity_) return raw_count_;
    std::vector<int64_t> out(raw_count_.rbegin(), raw_count_.rend());
    return out;
}

std::vector<int> spanning_subgraph::member_edges() const {
    std::vector<int> out;
    for (int e = 0; e < host_->edge_count(); ++e)
        if (host_->edge_alive(e) && member(e)) out.push_back(e);
    return out;
}

void spanning_subgraph::set_members(const std::vector<int>& ids) {
    polarity_ = false;
    std::fill(raw_member_.begin(), raw_member_.end(), 0);
    std::fill(raw_deg_.begin(), raw_deg_.end(), 0);
    std::fill(raw_count_.begin(), raw_count_.end(), 0);
    raw_count_[0] = host_->live_vertex_count();
    for (int e : ids) {
        require(host_->edge_alive(e), errc::dead_edge, std::to_string(e));
        require(!raw_member_[e], errc::invalid_params, "duplicate member edge");
        raw_member_[e] = 1;
        bump_raw_degree(host_->edge(e).u, +1);
        bump_raw_degree(host_->edge(e).v, +1);
    }
}

void spanning_subgraph::notify_vertex_added(int v) {
    if (v >= (int)raw_deg_.size()) raw_deg_.resize(v + 1, 0);
    raw_deg_[v] = 0;
    ++raw_count_[0];
}

void spanning_subgraph::notify_vertex_removed(int v) {
    assert(raw_deg_[v] == 0);
    (void)v;
    --raw_count_[0];
}

void spanning_subgraph::detach_edge(int e) {
    if ((int)raw_member_.size() <= e) return;
    if (raw_member_[e]) {
        raw_member_[e] = 0;
        bump_raw_degree(host_->edge(e).u, -1);
        bump_raw_degree(host_->edge(e).v, -1);
    }
}

void spanning_subgraph::attach_edge(int e, bool effective_member) {
    if (e >= (int)raw_member_.size()) raw_member_.resize(e + 1, 0);
    bool raw = effective_member != polarity_;
    raw_member_[e] = raw ? 1 : 0;
    if (raw) {
        bump_raw_degree(host_->edge(e).u, +1);
        bump_raw_degree(host_->edge(e).v, +1);
    }
}

} // namespace irrsub
