#include "irrsub/adjust.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace irrsub {

interval_params compute_interval_params(const scaled_b& b, int64_t alpha_scaled) {
    require(alpha_scaled >= 0, errc::invalid_params, "alpha must be non-negative");
    interval_params p;
    p.d = b.d();
    p.alpha_scaled = alpha_scaled;
    p.in_plus.assign(p.d + 2, 0);
    p.in_minus.assign(p.d + 2, 0);
    p.n_i.assign(p.d + 1, 0);
    p.m_i.assign(p.d + 1, 0);
    for (int i = 1; i <= p.d; ++i) {
        if (b.entries[i - 1] > alpha_scaled) {
            p.in_plus[i] = 1;
            p.plus_list.push_back(i);
        } else if (b.entries[i - 1] < -alpha_scaled) {
            p.in_minus[i] = 1;
            p.minus_list.push_back(i);
        }
    }
    auto walk = [&](int i, const std::vector<uint8_t>& set, int dir) {
        int t = 1;
        while (i + dir * t >= 1 && i + dir * t <= p.d && set[i + dir * t]) ++t;
        return t;
    };
    for (int i : p.plus_list) {
        p.n_i[i] = walk(i, p.in_plus, +1);
        p.m_i[i] = walk(i, p.in_plus, -1);
    }
    for (int i : p.minus_list) {
        p.n_i[i] = walk(i, p.in_minus, -1);
        p.m_i[i] = walk(i, p.in_minus, +1);
    }
    return p;
}

std::vector<int64_t> apply_edge(spanning_subgraph& h, int e, edge_action action) {
    require(h.host().edge_alive(e), errc::dead_edge, std::to_string(e));
    const int d = h.degree_cap();
    const int64_t s = d + 1;
    bool in_h = h.member(e);
    if (action == edge_action::remove)
        require(in_h, errc::wrong_side, "remove needs an edge in H");
    else
        require(!in_h, errc::wrong_side, "insert needs an edge in the complement");

    int i = h.h_degree(h.host().edge(e).u);
    int j = h.h_degree(h.host().edge(e).v);
    std::vector<int64_t> delta(d, 0);
    if (action == edge_action::remove) {
        delta[i - 1] += s;
        delta[j - 1] += s;
    } else {
        delta[i] -= s;
        delta[j] -= s;
    }
    h.toggle_edge(e);
    return delta;
}

std::vector<int64_t> apply_multistar(spanning_subgraph& h, const multi_star& star) {
    const int d = h.degree_cap();
    const int64_t s = d + 1;
    const multigraph& g = h.host();
    const bool del = star.side == star_side::in_h;

    require(g.vertex_alive(star.center), errc::vertex_out_of_range, "star center");
    int k = h.h_degree(star.center);
    assert(k == star.center_h_degree);
    int m = star.edge_total();
    require(m >= 1, errc::invalid_params, "empty star");
    if (del)
        require(m <= k, errc::index_out_of_range, "deletion star exceeds center degree");
    else
        require(k + m <= d, errc::index_out_of_range, "addition star exceeds complement degree");

    for (size_t q = 0; q < star.leaves.size(); ++q) {
        const auto& leaf = star.leaves[q];
        require(leaf.vertex != star.center, errc::invalid_params, "leaf equals center");
        for (size_t r = 0; r < q; ++r)
            require(star.leaves[r].vertex != leaf.vertex, errc::invalid_params, "duplicate leaf");
        int lq = h.h_degree(leaf.vertex);
        assert(lq == leaf.h_degree);
        int aq = (int)leaf.edges.size();
        require(aq >= 1, errc::invalid_params, "leaf without edges");
        if (del)
            require(aq <= lq, errc::index_out_of_range, "leaf multiplicity exceeds degree");
        else
            require(lq + aq <= d, errc::index_out_of_range, "leaf multiplicity exceeds complement degree");
        for (int e : leaf.edges) {
            require(g.edge_alive(e), errc::dead_edge, std::to_string(e));
            bool joins = (g.edge(e).u == star.center && g.edge(e).v == leaf.vertex) ||
                         (g.edge(e).v == star.center && g.edge(e).u == leaf.vertex);
            require(joins, errc::invalid_params, "edge does not join center and leaf");
            require(h.member(e) == del, errc::wrong_side, "star edge on the wrong side");
        }
    }

    std::vector<int64_t> delta(d, 0);
    if (del) {
        for (int t = 1; t <= m; ++t) delta[k + 1 - t - 1] += s;
        for (const auto& leaf : star.leaves) {
            int lq = h.h_degree(leaf.vertex);
            for (int t = 1; t <= (int)leaf.edges.size(); ++t) delta[lq + 1 - t - 1] += s;
        }
    } else {
        for (int t = 1; t <= m; ++t) delta[k + t - 1] -= s;
        for (const auto& leaf : star.leaves) {
            int lq = h.h_degree(leaf.vertex);
            for (int t = 1; t <= (int)leaf.edges.size(); ++t) delta[lq + t - 1] -= s;
        }
    }
    for (const auto& leaf : star.leaves)
        for (int e : leaf.edges) h.toggle_edge(e);
    return delta;
}

namespace {

// Directed selection: every vertex whose degree lies in the
// selector set picks its n_ell lowest-id incident edges on the given side;
// the first head whose in-count reaches m_k+1 becomes the star center.
std::optional<candidate> star_search(const spanning_subgraph& h, const interval_params& p,
                                     bool complement_side) {
    const multigraph& g = h.host();
    const int n = g.vertex_count();
    std::vector<std::vector<int>> arrived(n);

    for (int x = 0; x < n; ++x) {
        if (!g.vertex_alive(x)) continue;
        int deg = h.h_degree(x);
        int ell = complement_side ? deg + 1 : deg; // clause index of the selector
        bool selects = complement_side ? (ell <= p.d && p.in_plus[ell]) : (ell >= 1 && p.in_minus[ell]);
        if (!selects) continue;
        int quota = p.n_i[ell];
        // lowest-id incident edges on the relevant side
        std::vector<int> inc(g.incident(x).begin(), g.incident(x).end());
        std::sort(inc.begin(), inc.end());
        for (int e : inc) {
            if (quota == 0) break;
            if (h.member(e) == complement_side) continue;
            --quota;
            int y = g.other_end(e, x);
            int k = complement_side ? h.h_degree(y) + 1 : h.h_degree(y);
            bool head_ok = complement_side ? (k >= 1 && k <= p.d && p.in_minus[k])
                                           : (k >= 1 && k <= p.d && p.in_plus[k]);
            if (!head_ok) continue; // cannot happen once clauses (I)/(II) failed
            auto& list = arrived[y];
            if ((int)list.size() >= p.m_i[k] + 1) continue;
            list.push_back(e);
            if ((int)list.size() == p.m_i[k] + 1) {
                multi_star star;
                star.center = y;
                star.center_h_degree = h.h_degree(y);
                star.side = complement_side ? star_side::in_complement : star_side::in_h;
                for (int se : list) {
                    int leaf = g.other_end(se, y);
                    auto it = std::find_if(star.leaves.begin(), star.leaves.end(),
                                           [&](const star_leaf& l) { return l.vertex == leaf; });
                    if (it == star.leaves.end()) {
                        star.leaves.push_back({leaf, h.h_degree(leaf), {se}});
                    } else {
                        it->edges.push_back(se);
                    }
                }
                candidate c;
                c.k = complement_side ? candidate::kind::star_in_complement
                                      : candidate::kind::star_in_h;
                c.star = std::move(star);
                return c;
            }
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<candidate> find_candidate(const spanning_subgraph& h, const interval_params& p) {
    const multigraph& g = h.host();

    // (I): an H(i,j)-edge in H with i in A-, j not in A+
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!g.edge_alive(e) || !h.member(e)) continue;
        int a = h.h_degree(g.edge(e).u), b = h.h_degree(g.edge(e).v);
        for (auto [i, j] : {std::pair{a, b}, std::pair{b, a}}) {
            if (i >= 1 && p.in_minus[i] && !p.in_plus[j]) {
                candidate c;
                c.k = candidate::kind::edge_in_h;
                c.edge = e;
                c.i = i;
                c.j = j;
                return c;
            }
        }
    }
    // (II): an H(i-1,j-1)-edge in the complement with i in A+, j not in A-
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!g.edge_alive(e) || h.member(e)) continue;
        int a = h.h_degree(g.edge(e).u) + 1, b = h.h_degree(g.edge(e).v) + 1;
        for (auto [i, j] : {std::pair{a, b}, std::pair{b, a}}) {
            if (i <= p.d && p.in_plus[i] && !(j <= p.d && p.in_minus[j])) {
                candidate c;
                c.k = candidate::kind::edge_in_complement;
                c.edge = e;
                c.i = i;
                c.j = j;
                return c;
            }
        }
    }
    // (III): deletion star with center in A+, leaves in A-
    if (auto c = star_search(h, p, false)) return c;
    // (IV): addition star, mirrored
    if (auto c = star_search(h, p, true)) return c;
    return std::nullopt;
}

std::optional<int> find_edge_33(const spanning_subgraph& h) {
    require(h.degree_cap() == 3, errc::not_cubic, "find_edge_33");
    const multigraph& g = h.host();
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!g.edge_alive(e) || !h.member(e)) continue;
        if (h.h_degree(g.edge(e).u) == 3 && h.h_degree(g.edge(e).v) == 3) return e;
    }
    return std::nullopt;
}

std::optional<int> find_edge_00_complement(const spanning_subgraph& h) {
    require(h.degree_cap() == 3, errc::not_cubic, "find_edge_00_complement");
    const multigraph& g = h.host();
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!g.edge_alive(e) || h.member(e)) continue;
        if (h.h_degree(g.edge(e).u) == 0 && h.h_degree(g.edge(e).v) == 0) return e;
    }
    return std::nullopt;
}

} // namespace irrsub
