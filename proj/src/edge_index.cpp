#include "irrsub/edge_index.hpp"

#include <algorithm>
#include <cassert>

namespace irrsub {

int edge_index::pair_key(bool member, int a, int b) {
    if (a > b) std::swap(a, b);
    return (member ? 16 : 0) + a * 4 + b;
}

int edge_index::complement_degree(int v) const { return g_->degree(v) - h_->raw_degree(v); }

void edge_index::build(const multigraph& g, const spanning_subgraph& h) {
    g_ = &g;
    h_ = &h;
    for (auto& b : buckets_) b.clear();
    for (auto& s : star_sets_) s.clear();
    edge_key_.assign(g.edge_count(), -1);
    edge_pos_.assign(g.edge_count(), -1);
    for (auto& p : star_pos_) p.assign(g.vertex_count(), -1);
    updates_ = 0;
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.edge_alive(e)) place_edge(e);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.vertex_alive(v)) refresh_vertex(v);
}

void edge_index::set_insert(std::vector<int>& set, std::vector<int>& pos, int v) {
    if (pos[v] >= 0) return;
    pos[v] = (int)set.size();
    set.push_back(v);
    ++updates_;
}

void edge_index::set_erase(std::vector<int>& set, std::vector<int>& pos, int v) {
    if (pos[v] < 0) return;
    int p = pos[v];
    int moved = set.back();
    set[p] = moved;
    set.pop_back();
    if (moved != v) pos[moved] = p;
    pos[v] = -1;
    ++updates_;
}

void edge_index::place_edge(int e) {
    if (e >= (int)edge_key_.size()) {
        edge_key_.resize(e + 1, -1);
        edge_pos_.resize(e + 1, -1);
    }
    int want = -1;
    if (g_->edge_alive(e)) {
        const auto& r = g_->edge(e);
        want = pair_key(h_->raw_member(e), h_->raw_degree(r.u), h_->raw_degree(r.v));
    }
    int cur = edge_key_[e];
    if (cur == want) return;
    if (cur >= 0) {
        auto& b = buckets_[cur];
        int p = edge_pos_[e];
        int moved = b.back();
        b[p] = moved;
        b.pop_back();
        edge_pos_[moved] = p;
        ++updates_;
    }
    edge_key_[e] = (int8_t)want;
    edge_pos_[e] = -1;
    if (want >= 0) {
        edge_pos_[e] = (int)buckets_[want].size();
        buckets_[want].push_back(e);
        ++updates_;
    }
}

void edge_index::drop_edge(int e) {
    if (e < (int)edge_key_.size() && edge_key_[e] >= 0) {
        auto& b = buckets_[edge_key_[e]];
        int p = edge_pos_[e];
        int moved = b.back();
        b[p] = moved;
        b.pop_back();
        edge_pos_[moved] = p;
        edge_key_[e] = -1;
        edge_pos_[e] = -1;
        ++updates_;
    }
}

void edge_index::refresh_vertex(int v) {
    for (auto& p : star_pos_)
        if (v >= (int)p.size()) p.resize(v + 1, -1);
    bool want[4] = {false, false, false, false};
    if (g_->vertex_alive(v)) {
        int rdeg = h_->raw_degree(v);
        int cdeg = g_->degree(v) - rdeg;
        int hits_h = 0, hits_c = 0;
        for (int e : g_->incident(v)) {
            int w = g_->other_end(e, v);
            if (h_->raw_member(e)) {
                hits_h += h_->raw_degree(w) == 1;
            } else {
                hits_c += g_->degree(w) - h_->raw_degree(w) == 1;
            }
        }
        if (hits_h >= 2 && (rdeg == 2 || rdeg == 3)) want[rdeg - 2] = true;
        if (hits_c >= 2 && (cdeg == 2 || cdeg == 3)) want[2 + cdeg - 2] = true;
    }
    for (int s = 0; s < 4; ++s) {
        if (want[s])
            set_insert(star_sets_[s], star_pos_[s], v);
        else
            set_erase(star_sets_[s], star_pos_[s], v);
    }
}

void edge_index::refresh_around(int v) {
    for (int e : g_->incident(v)) place_edge(e);
    refresh_vertex(v);
    for (int e : g_->incident(v)) refresh_vertex(g_->other_end(e, v));
}

std::optional<int> edge_index::pick_p(int i, int j) const {
    bool pol = h_->polarity();
    int key = pol ? pair_key(false, 3 - i, 3 - j) : pair_key(true, i, j);
    const auto& b = buckets_[key];
    if (b.empty()) return std::nullopt;
    return b.back();
}

std::optional<int> edge_index::pick_q(int i, int j) const {
    bool pol = h_->polarity();
    int key = pol ? pair_key(true, 3 - i, 3 - j) : pair_key(false, i, j);
    const auto& b = buckets_[key];
    if (b.empty()) return std::nullopt;
    return b.back();
}

std::optional<edge_index::star2> edge_index::extract_star(bool raw_member_side,
                                                          const std::vector<int>& set) const {
    if (set.empty()) return std::nullopt;
    int v = set.back();
    star2 out{v, {-1, -1}};
    int found = 0;
    std::vector<int> inc(g_->incident(v).begin(), g_->incident(v).end());
    std::sort(inc.begin(), inc.end());
    for (int e : inc) {
        if (h_->raw_member(e) != raw_member_side) continue;
        int w = g_->other_end(e, v);
        int wdeg = raw_member_side ? h_->raw_degree(w) : complement_degree(w);
        if (wdeg != 1) continue;
        out.edges[found++] = e;
        if (found == 2) return out;
    }
    fail(errc::internal_invariant, "star set member lost its witness edges");
}

std::optional<edge_index::star2> edge_index::pick_star_h(int center_degree) const {
    require(center_degree == 2 || center_degree == 3, errc::index_out_of_range, "star degree");
    bool pol = h_->polarity();
    int s = pol ? 2 + (center_degree - 2) : (center_degree - 2);
    return extract_star(!pol, star_sets_[s]);
}

std::optional<edge_index::star2> edge_index::pick_star_c(int center_degree) const {
    require(center_degree == 2 || center_degree == 3, errc::index_out_of_range, "star degree");
    bool pol = h_->polarity();
    int s = pol ? (center_degree - 2) : 2 + (center_degree - 2);
    return extract_star(pol, star_sets_[s]);
}

bool edge_index::matches_rebuild() const {
    edge_index fresh;
    fresh.build(*g_, *h_);
    for (int k = 0; k < 32; ++k) {
        auto a = buckets_[k];
        auto b = fresh.buckets_[k];
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }
    for (int s = 0; s < 4; ++s) {
        auto a = star_sets_[s];
        auto b = fresh.star_sets_[s];
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }
    return true;
}

} // namespace irrsub
