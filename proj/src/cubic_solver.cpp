#include "irrsub/cubic_solver.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <string>

namespace irrsub {

const char* cubic_state_name(cubic_state s) {
    switch (s) {
        case cubic_state::state0: return "state0";
        case cubic_state::proper: return "proper";
        case cubic_state::state1: return "state1";
        case cubic_state::state2: return "state2";
        case cubic_state::other: return "other";
    }
    return "unknown";
}

cubic_state classify(const scaled_a& a) {
    require(a.d == 3, errc::not_cubic, "classify");
    const auto& e = a.entries;
    auto in = [](int64_t x, int64_t lo, int64_t hi) { return lo <= x && x <= hi; };
    if (in(e[0], -8, 2) && in(e[3], -8, 2) && in(e[1], -2, 8) && in(e[2], -2, 8))
        return cubic_state::state0;
    if (in(e[0], -8, 8) && in(e[1], -8, 8) && in(e[2], -8, 8) && in(e[3], -8, 8))
        return cubic_state::proper;
    if (e[0] == -10 && in(e[1], -2, 6) && in(e[2], -2, 6) && in(e[3], -2, 6))
        return cubic_state::state1;
    if (e[0] == -10 && in(e[1], 2, 10) && in(e[2], -2, 6) && in(e[3], -6, 2))
        return cubic_state::state2;
    return cubic_state::other;
}

namespace {

// Registry of edges usable as contraction starting points: pair multiplicity
// exactly 2 (listed once, lowest id of the pair) or exactly 1. Triple pairs
// are finished K2^3 components and stay unlisted.
struct mult_registry {
    multigraph* g = nullptr;
    std::vector<int> doubled, simple;
    std::vector<int> dpos, spos;

    void init(multigraph& graph) {
        g = &graph;
        dpos.assign(graph.edge_count(), -1);
        spos.assign(graph.edge_count(), -1);
        for (int e = 0; e < graph.edge_count(); ++e)
            if (graph.edge_alive(e)) refresh_edge(e);
    }

    void list(std::vector<int>& vec, std::vector<int>& pos, int e, bool want) {
        if (want && pos[e] < 0) {
            pos[e] = (int)vec.size();
            vec.push_back(e);
        } else if (!want && pos[e] >= 0) {
            int p = pos[e];
            int moved = vec.back();
            vec[p] = moved;
            vec.pop_back();
            if (moved != e) pos[moved] = p;
            pos[e] = -1;
        }
    }

    void refresh_edge(int e) {
        if (e >= (int)dpos.size()) {
            dpos.resize(e + 1, -1);
            spos.resize(e + 1, -1);
        }
        bool want_d = false, want_s = false;
        if (g->edge_alive(e)) {
            int u = g->edge(e).u, v = g->edge(e).v;
            int mult = g->pair_multiplicity(u, v);
            if (mult == 1) {
                want_s = true;
            } else if (mult == 2) {
                int mn = INT_MAX;
                for (int e2 : g->incident(u))
                    if (g->other_end(e2, u) == v) mn = std::min(mn, e2);
                want_d = (e == mn);
            }
        }
        list(doubled, dpos, e, want_d);
        list(simple, spos, e, want_s);
    }

    void refresh_vertex(int v) {
        for (int e : g->incident(v)) refresh_edge(e);
    }
};

// the unique live edge at u whose other endpoint differs from v
int outside_edge(const multigraph& g, int u, int v) {
    int found = -1;
    for (int e : g.incident(u)) {
        if (g.other_end(e, u) == v) continue;
        require(found < 0, errc::internal_invariant, "expected a unique outside edge");
        found = e;
    }
    require(found >= 0, errc::internal_invariant, "vertex has no outside edge");
    return found;
}

cubic_op_record contract_type1(multigraph& g, mult_registry& reg, int a, int b) {
    int ea = outside_edge(g, a, b);
    int x = g.other_end(ea, a);
    int eb = outside_edge(g, b, a);
    int y = g.other_end(eb, b);
    require(x != y, errc::internal_invariant, "type-1 contraction needs distinct anchors");
    int p1 = -1, p2 = -1;
    for (int e : g.incident(a))
        if (g.other_end(e, a) == b) (p1 < 0 ? p1 : p2) = e;
    require(p2 >= 0, errc::internal_invariant, "type-1 contraction needs a doubled pair");
    if (p1 > p2) std::swap(p1, p2);

    cubic_op_record rec;
    rec.kind = cubic_op::type1;
    rec.anchors = {x, y, -1, -1};
    rec.new_vertices = {a, b};
    rec.added_edges = {ea, p1, p2, eb, -1};
    rec.removed_edges = {g.edge_count(), -1};
    contract_pair(g, rec);
    for (int e : {ea, p1, p2, eb}) reg.refresh_edge(e);
    reg.refresh_vertex(x);
    reg.refresh_vertex(y);
    return rec;
}

cubic_op_record contract_type2(multigraph& g, mult_registry& reg, int e) {
    int u = g.edge(e).u, v = g.edge(e).v;
    int ua = -1, ub = -1, va = -1, vb = -1;
    for (int f : g.incident(u))
        if (f != e) (ua < 0 ? ua : ub) = f;
    for (int f : g.incident(v))
        if (f != e) (va < 0 ? va : vb) = f;
    int x = g.other_end(ua, u), y = g.other_end(ub, u);
    int z = g.other_end(va, v), w = g.other_end(vb, v);
    require(x != y && z != w, errc::internal_invariant,
            "type-2 contraction needs distinct neighbor pairs");

    cubic_op_record rec;
    rec.kind = cubic_op::type2;
    rec.anchors = {x, y, z, w};
    rec.new_vertices = {u, v};
    rec.added_edges = {ua, ub, va, vb, e};
    rec.removed_edges = {g.edge_count(), g.edge_count() + 1};
    contract_pair(g, rec);
    for (int f : {ua, ub, va, vb, e}) reg.refresh_edge(f);
    for (int a : {x, y, z, w}) reg.refresh_vertex(a);
    return rec;
}

// Pick a starting edge and run the constant-distance walk to an
// edge admitting a contraction.
cubic_op_record contract_once(multigraph& g, mult_registry& reg) {
    if (!reg.doubled.empty()) {
        int e1 = reg.doubled.back();
        int u = g.edge(e1).u, v = g.edge(e1).v;
        int eu = outside_edge(g, u, v);
        int x = g.other_end(eu, u);
        int ev = outside_edge(g, v, u);
        int y = g.other_end(ev, v);
        if (x != y) return contract_type1(g, reg, u, v);
        // common neighbor w: follow its single edge leaving {u, v}
        int w = x;
        int ew = -1;
        for (int f : g.incident(w)) {
            int o = g.other_end(f, w);
            if (o == u || o == v) continue;
            require(ew < 0, errc::internal_invariant, "w must have one outside edge");
            ew = f;
        }
        require(ew >= 0, errc::internal_invariant, "w must have one outside edge");
        int x2 = g.other_end(ew, w);
        int oa = -1, ob = -1;
        for (int f : g.incident(x2))
            if (f != ew) (oa < 0 ? oa : ob) = f;
        int p = g.other_end(oa, x2), q = g.other_end(ob, x2);
        if (p != q) return contract_type2(g, reg, ew);
        return contract_type1(g, reg, x2, p);
    }
    require(!reg.simple.empty(), errc::too_small,
            "every component is a K2^3; nothing to contract");
    return contract_type2(g, reg, reg.simple.back());
}

} // namespace

cubic_op_record find_contraction(multigraph& g) {
    require(g.regularity() == 3, errc::not_cubic, "find_contraction");
    mult_registry reg;
    reg.init(g);
    return contract_once(g, reg);
}

decomposition decompose(multigraph& g) {
    require(g.regularity() == 3, errc::not_cubic, "decompose");
    int start_vertices = g.live_vertex_count();
    mult_registry reg;
    reg.init(g);
    decomposition out;
    while (!reg.doubled.empty() || !reg.simple.empty())
        out.ops.push_back(contract_once(g, reg));
    out.base_components = g.live_edge_count() / 3;
    require(g.live_edge_count() % 3 == 0 &&
                g.live_vertex_count() == 2 * out.base_components,
            errc::internal_invariant, "decomposition did not end at mK2^3");
    require(start_vertices / 2 == out.base_components + (int)out.ops.size(),
            errc::internal_invariant, "vertex-pair count identity violated");
    return out;
}

spanning_subgraph base_subgraph(const multigraph& g) {
    require(g.regularity() == 3, errc::not_cubic, "base_subgraph");
    spanning_subgraph h(g);
    // components in vertex-discovery order; each must be a triple pair
    std::vector<uint8_t> seen(g.vertex_count(), 0);
    std::vector<std::array<int, 3>> comps;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!g.vertex_alive(v) || seen[v]) continue;
        auto inc = g.incident(v);
        require(inc.size() == 3, errc::invalid_params, "host is not an mK2^3");
        int partner = g.other_end(inc[0], v);
        std::array<int, 3> edges{inc[0], inc[1], inc[2]};
        std::sort(edges.begin(), edges.end());
        for (int e : edges)
            require(g.other_end(e, v) == partner, errc::invalid_params, "host is not an mK2^3");
        seen[v] = seen[partner] = 1;
        comps.push_back(edges);
    }
    int m = (int)comps.size();
    int q = m / 4;
    static constexpr int tail_pattern[4] = {1, 2, 0, 3};
    for (int c = 0; c < m; ++c) {
        int want = c < 4 * q ? c % 4 : tail_pattern[c - 4 * q];
        for (int t = 0; t < want; ++t) h.toggle_edge(comps[c][t]);
    }
    require(classify(a_scaled(h)) == cubic_state::state0, errc::internal_invariant,
            "base pattern must be state-0");
    return h;
}

cubic_ops::cubic_ops(multigraph& g, spanning_subgraph& h, bool debug_verify)
    : g_(&g), h_(&h), debug_verify_(debug_verify) {
    require(g.regularity() == 3, errc::not_cubic, "cubic_ops");
    idx_.build(g, h);
}

void cubic_ops::toggle(int e) {
    h_->toggle_edge(e);
    ++toggles_;
    idx_.refresh_around(g_->edge(e).u);
    idx_.refresh_around(g_->edge(e).v);
}

void cubic_ops::toggle_star(const edge_index::star2& s) {
    toggle(s.edges[0]);
    toggle(s.edges[1]);
}

void cubic_ops::kill_edge_tracked(int e) {
    if (h_->raw_member(e)) ++toggles_;
    idx_.drop_edge(e);
    int u = g_->edge(e).u, v = g_->edge(e).v;
    h_->detach_edge(e);
    g_->kill_edge(e);
    if (defer_) {
        touched_.push_back(u);
        touched_.push_back(v);
    } else {
        idx_.refresh_around(u);
        idx_.refresh_around(v);
    }
}

void cubic_ops::materialize_vertex_tracked(int v) {
    if (v == g_->vertex_count())
        g_->add_vertex();
    else
        g_->revive_vertex(v);
    h_->notify_vertex_added(v);
    if (defer_)
        touched_.push_back(v);
    else
        idx_.refresh_vertex(v);
}

void cubic_ops::add_edge_tracked(int id, int u, int v, bool effective_member) {
    if (id == g_->edge_count()) {
        g_->add_edge(u, v);
    } else {
        require(id >= 0 && id < g_->edge_count() && !g_->edge_alive(id), errc::malformed_record,
                "added edge id not fresh or dead");
        const auto& r = g_->edge(id);
        require((r.u == u && r.v == v) || (r.u == v && r.v == u), errc::malformed_record,
                "revived edge endpoints differ from record");
        g_->revive_edge(id);
    }
    h_->attach_edge(id, effective_member);
    if (h_->raw_member(id)) ++toggles_;
    if (defer_) {
        touched_.push_back(u);
        touched_.push_back(v);
    } else {
        idx_.place_edge(id);
        idx_.refresh_around(u);
        idx_.refresh_around(v);
    }
}

void cubic_ops::begin_batch() {
    defer_ = true;
    touched_.clear();
}

// one refresh per touched vertex instead of one per mutation; nothing reads
// the index while a batch is open
void cubic_ops::end_batch() {
    defer_ = false;
    std::sort(touched_.begin(), touched_.end());
    touched_.erase(std::unique(touched_.begin(), touched_.end()), touched_.end());
    std::vector<int> ring = touched_;
    for (int v : touched_)
        for (int e : g_->incident(v)) {
            idx_.place_edge(e);
            ring.push_back(g_->other_end(e, v));
        }
    std::sort(ring.begin(), ring.end());
    ring.erase(std::unique(ring.begin(), ring.end()), ring.end());
    for (int v : ring) idx_.refresh_vertex(v);
    touched_.clear();
}

void cubic_ops::repair_after_extension() {
    auto c = state();
    if (c == cubic_state::state1) {
        repair_state1();
        c = state();
    }
    require(c == cubic_state::state0 || c == cubic_state::proper, errc::internal_invariant,
            "extension left a subgraph that is neither proper nor state-1");
    proper_to_state0();
}

void cubic_ops::proper_to_state0() {
    {
        auto c = state();
        if (c == cubic_state::state0) return; // already there; leave h untouched
        require(c == cubic_state::proper, errc::wrong_state,
                "proper_to_state0 needs a proper subgraph");
    }
    // Phase 1: drive a_0 + a_3 down until both lie in
    // [-2, 1/2]; at most 8 edge adjustments.
    for (int iter = 0;; ++iter) {
        auto av = a();
        if (av.entries[0] <= 2 && av.entries[3] <= 2) break;
        require(iter < 8, errc::internal_invariant, "phase 1 exceeded 8 iterations");
        if (av.entries[0] > av.entries[3]) {
            h_->flip_polarity();
            av = a();
        }
        // now a~_3 >= 4
        if (av.entries[2] <= 0) {
            auto e33 = idx_.pick_p(3, 3);
            require(e33.has_value(), errc::internal_invariant, "H(3,3)-edge guaranteed");
            toggle(*e33);
        } else if (auto e23 = idx_.pick_p(2, 3)) {
            toggle(*e23);
        } else {
            auto e22 = idx_.pick_p(2, 2);
            auto e33 = idx_.pick_p(3, 3);
            require(e22.has_value() && e33.has_value(), errc::internal_invariant,
                    "H(2,2)- and H(3,3)-edges guaranteed");
            toggle(*e22);
            toggle(*e33);
        }
    }
    // Phase 2 (second step): raise a_2 to >= -1/2 keeping a_0, a_3 in range.
    for (int iter = 0;; ++iter) {
        require(iter < 16, errc::internal_invariant, "phase 2 exceeded its cap");
        auto av = a();
        if (av.entries[2] > av.entries[1]) {
            h_->flip_polarity();
            av = a();
        }
        if (av.entries[2] >= -2) break;
        if (av.entries[3] > 0) {
            auto e33 = idx_.pick_p(3, 3);
            require(e33.has_value(), errc::internal_invariant, "H(3,3)-edge guaranteed");
            toggle(*e33);
            break;
        }
        if (auto q01 = idx_.pick_q(0, 1)) {
            toggle(*q01);
            continue;
        }
        auto q11 = idx_.pick_q(1, 1);
        require(q11.has_value(), errc::internal_invariant, "H(1,1) complement edge guaranteed");
        if (av.entries[0] >= 0) {
            auto q00 = idx_.pick_q(0, 0);
            require(q00.has_value(), errc::internal_invariant, "H(0,0) complement edge guaranteed");
            toggle(*q00);
            toggle(*q11);
        } else {
            toggle(*q11);
        }
        break;
    }
    require(state() == cubic_state::state0, errc::internal_invariant,
            "phase 2 must end in state-0");
}

void cubic_ops::repair_state1() {
    for (int iter = 0;; ++iter) {
        require(iter < 16, errc::internal_invariant, "state-1 repair exceeded its cap");
        auto av = a();
        require(classify(av) == cubic_state::state1, errc::wrong_state, "repair_state1");
        if (auto e12 = idx_.pick_p(1, 2)) {
            toggle(*e12);
            break;
        }
        if (auto e11 = idx_.pick_p(1, 1)) {
            toggle(*e11);
            if (av.entries[1] != -2) break; // a_1 was > -1/2: already proper
            // a(H-f) = (-1/2, -5/2, 3/2, 3/2); one more deletion fixes it
            if (auto e22 = idx_.pick_p(2, 2)) {
                toggle(*e22);
            } else {
                auto e23 = idx_.pick_p(2, 3);
                require(e23.has_value(), errc::internal_invariant,
                        "H(2,2)- or H(2,3)-edge guaranteed");
                toggle(*e23);
            }
            break;
        }
        auto e13 = idx_.pick_p(1, 3);
        require(e13.has_value(), errc::internal_invariant, "H(1,3)-edge guaranteed");
        if (av.entries[2] != 6) {
            toggle(*e13);
            break;
        }
        if (av.entries[1] == 6 && av.entries[3] == -2) {
            // case (I): delete an S_{(3;1,1)} path
            auto s3 = idx_.pick_star_h(3);
            require(s3.has_value(), errc::internal_invariant, "S_{(3;1,1)} guaranteed");
            toggle_star(*s3);
            break;
        }
        // case (II)
        if (auto e22 = idx_.pick_p(2, 2)) {
            toggle(*e22);
            toggle(*e13);
            break;
        }
        auto e23 = idx_.pick_p(2, 3);
        require(e23.has_value(), errc::internal_invariant, "H(2,3)-edge guaranteed");
        toggle(*e23); // stays state-1 with a_1 moved up; repeat
    }
    auto c = state();
    require(c == cubic_state::state0 || c == cubic_state::proper, errc::internal_invariant,
            "state-1 repair must end proper");
}

void cubic_ops::repair_state2() {
    auto c = state();
    if (c == cubic_state::state1) { // a_1 <= 3/2 makes it a state-1 instance
        repair_state1();
        return;
    }
    require(c == cubic_state::state2, errc::wrong_state, "repair_state2");
    auto av = a();
    require(av.entries[1] == 10, errc::internal_invariant,
            "a state-2 vector that is not state-1 has a_1 = 5/2");
    int64_t x = av.entries[2];

    auto require_proper = [&] {
        auto cc = state();
        require(cc == cubic_state::state0 || cc == cubic_state::proper, errc::internal_invariant,
                "state-2 repair must end proper");
    };

    if (auto e11 = idx_.pick_p(1, 1)) {
        toggle(*e11);
        require_proper();
        return;
    }
    if (auto s2 = idx_.pick_star_h(2)) {
        toggle_star(*s2);
        require_proper();
        return;
    }
    if (x <= 2) {
        auto e13 = idx_.pick_p(1, 3);
        require(e13.has_value(), errc::internal_invariant, "H(1,3)-edge guaranteed");
        toggle(*e13);
        require_proper();
        return;
    }
    // x = 3/2, i.e. a(H) = (-5/2, 5/2, 3/2, -3/2)
    auto e12 = idx_.pick_p(1, 2);
    auto e13 = idx_.pick_p(1, 3);
    if (e12 && e13) {
        toggle(*e12);
        toggle(*e13);
    } else if (!e12) {
        auto s3 = idx_.pick_star_h(3);
        require(s3.has_value(), errc::internal_invariant, "S_{(3;1,1)} guaranteed");
        toggle_star(*s3);
    } else {
        fail(errc::internal_invariant,
             "p13 = 0 with p11 = 0 forces an S_{(2;1,1)}, handled above");
    }
    // a is now (-1/2, 3/2, 3/2, -5/2): the complement is state-1
    h_->flip_polarity();
    require(state() == cubic_state::state1, errc::internal_invariant,
            "complement must be state-1 here");
    repair_state1();
    require_proper();
}

void cubic_ops::apply_op_and_repair(const cubic_op_record& rec) {
    require(state() == cubic_state::state0, errc::wrong_state, "apply_op_and_repair");
    int u = rec.new_vertices[0], v = rec.new_vertices[1];
    for (int i = 0; i < rec.removed_edge_count(); ++i)
        require(g_->edge_alive(rec.removed_edges[i]), errc::malformed_record,
                "removed edge not live");

    if (rec.kind == cubic_op::type1) {
        int exy = rec.removed_edges[0];
        if (!h_->member(exy)) h_->flip_polarity();
        begin_batch();
        kill_edge_tracked(exy);
        materialize_vertex_tracked(u);
        materialize_vertex_tracked(v);
        for (int i = 0; i < 4; ++i) {
            auto [a2, b2] = rec.added_endpoints(i);
            add_edge_tracked(rec.added_edges[i], a2, b2, true);
        }
        end_batch();
        repair_after_extension();
    } else {
        int exy = rec.removed_edges[0], ezw = rec.removed_edges[1];
        bool mx = h_->member(exy), mz = h_->member(ezw);
        if (!mx && !mz) {
            h_->flip_polarity();
            mx = mz = true;
        }
        begin_batch();
        kill_edge_tracked(exy);
        kill_edge_tracked(ezw);
        materialize_vertex_tracked(u);
        materialize_vertex_tracked(v);
        if (mx && mz) {
            for (int i = 0; i < 5; ++i) {
                auto [a2, b2] = rec.added_endpoints(i);
                add_edge_tracked(rec.added_edges[i], a2, b2, true);
            }
            end_batch();
            repair_after_extension();
        } else {
            // exactly one removed edge was in H; its middle vertex carries the
            // H-path x-u-y plus uv, the other new vertex gets H-degree 1
            bool mem[5];
            if (mx) {
                mem[0] = mem[1] = true;
                mem[2] = mem[3] = false;
            } else {
                mem[0] = mem[1] = false;
                mem[2] = mem[3] = true;
            }
            mem[4] = true;
            for (int i = 0; i < 5; ++i) {
                auto [a2, b2] = rec.added_endpoints(i);
                add_edge_tracked(rec.added_edges[i], a2, b2, mem[i]);
            }
            end_batch();
            auto av = a();
            auto c = classify(av);
            if (c == cubic_state::state1) {
                repair_state1();
                proper_to_state0();
            } else if (c == cubic_state::state2) {
                repair_state2();
                proper_to_state0();
            } else if (c == cubic_state::state0 || c == cubic_state::proper) {
                proper_to_state0();
            } else {
                require(av.entries[1] == 10 && av.entries[0] >= -8, errc::internal_invariant,
                        "H* must be proper, state-1/2, or have a_1 = 5/2");
                toggle(rec.added_edges[4]); // drop uv, an H*(1,3)-edge
                auto c2 = state();
                if (c2 != cubic_state::state0 && c2 != cubic_state::proper) {
                    h_->flip_polarity();
                    require(state() == cubic_state::state1, errc::internal_invariant,
                            "complement of H* - uv must be proper or state-1");
                    repair_state1();
                }
                proper_to_state0();
            }
        }
    }
    require(state() == cubic_state::state0, errc::internal_invariant,
            "replay step must end in state-0");
    if (debug_verify_) debug_check();
}

void cubic_ops::debug_check() const {
    require(idx_.matches_rebuild(), errc::internal_invariant,
            "incremental index differs from rebuild");
}

std::pair<spanning_subgraph, cubic_stats> solve_cubic(multigraph& g, bool debug_verify) {
    require(g.regularity() == 3, errc::not_cubic, "solve_cubic");
    cubic_stats st;
    auto dec = decompose(g);
    st.base_components = dec.base_components;
    spanning_subgraph h = base_subgraph(g);
    {
        cubic_ops ops(g, h, debug_verify);
        for (auto it = dec.ops.rbegin(); it != dec.ops.rend(); ++it) {
            ops.apply_op_and_repair(*it);
            ++st.ops_replayed;
        }
        st.toggles = ops.toggles();
        st.index_updates = ops.index().update_count();
    }
    require(classify(a_scaled(h)) == cubic_state::state0, errc::internal_invariant,
            "solve_cubic must end in state-0");
    // linear-work invariant: bounded updates per vertex
    require(st.toggles + st.index_updates <=
                500ull * (uint64_t)g.live_vertex_count() + 10000ull,
            errc::internal_invariant, "work counters are not linear in n");
    return {std::move(h), st};
}

} // namespace irrsub
