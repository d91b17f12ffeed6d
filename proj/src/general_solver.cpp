#include "irrsub/general_solver.hpp"

#include <algorithm>
#include <cassert>
#include <random>

namespace { inline int64_t iabs(int64_t x) { return x < 0 ? -x : x; } }
#include <string>

namespace irrsub {

namespace {

void add_delta(scaled_b& b, const std::vector<int64_t>& delta) {
    for (int i = 0; i < b.d(); ++i) b.entries[i] += delta[i];
}

void check_improved(const scaled_b& before, const scaled_b& after) {
    require(is_improvement(before, after) != improvement_kind::not_improvement,
            errc::internal_invariant, "adjustment did not improve");
}

} // namespace

void improve_by_edge(spanning_subgraph& h, int e, edge_action action) {
    const int64_t s = h.degree_cap() + 1;
    scaled_b before = b_scaled(h);
    const auto& r = h.host().edge(e);
    if (action == edge_action::remove) {
        require(h.member(e), errc::wrong_side, "remove needs an edge in H");
        int64_t bi = b_at(before, h.h_degree(r.u));
        int64_t bj = b_at(before, h.h_degree(r.v));
        require(std::min(bi, bj) < -s, errc::precondition_violated, "need b_i < -1");
        require(bi + bj < -s, errc::precondition_violated, "need b_i + b_j < -1");
    } else {
        require(!h.member(e), errc::wrong_side, "insert needs a complement edge");
        int64_t bi = b_at(before, h.h_degree(r.u) + 1);
        int64_t bj = b_at(before, h.h_degree(r.v) + 1);
        require(std::max(bi, bj) > s, errc::precondition_violated, "need b_i > 1");
        require(bi + bj > s, errc::precondition_violated, "need b_i + b_j > 1");
    }
    auto delta = apply_edge(h, e, action);
    scaled_b after = before;
    add_delta(after, delta);
    assert(after.entries == b_scaled(h).entries);
    check_improved(before, after);
}

void improve_by_multistar(spanning_subgraph& h, const multi_star& star, const interval_params& p) {
    const int d = h.degree_cap();
    const int64_t s = d + 1;
    require(p.alpha_scaled >= (int64_t)d * s, errc::precondition_violated, "need alpha >= d");
    scaled_b before = b_scaled(h);
    int m = star.edge_total();
    if (star.side == star_side::in_h) {
        int k = star.center_h_degree; // in A+
        require(k >= 1 && k <= d && p.in_plus[k], errc::precondition_violated,
                "star center degree not in A+");
        require(b_at(before, k - m + 1) <= p.alpha_scaled - (int64_t)d * s,
                errc::precondition_violated, "need b_{k-m_k} <= alpha - d");
    } else {
        int k = star.center_h_degree + 1; // in A-
        require(k >= 1 && k <= d && p.in_minus[k], errc::precondition_violated,
                "star center degree not in A-");
        require(b_at(before, k + m - 1) >= -(p.alpha_scaled - (int64_t)d * s),
                errc::precondition_violated, "need b_{k+m_k} >= -(alpha - d)");
    }
    auto delta = apply_multistar(h, star);
    scaled_b after = before;
    add_delta(after, delta);
    assert(after.entries == b_scaled(h).entries);
    check_improved(before, after);
}

reduce_outcome reduce_step(spanning_subgraph& h, int64_t m_scaled) {
    const int d = h.degree_cap();
    const int64_t s = d + 1;
    const int64_t window = (int64_t)d * s; // scaled width d
    require(m_scaled >= window, errc::invalid_params, "M must be at least d");
    const multigraph& g = h.host();

    scaled_b b = b_scaled(h);
    for (int j = 1; j <= d; ++j) {
        int64_t v = iabs(b_at(b, j));
        if (v > m_scaled - window && v <= m_scaled) return {false, j};
    }

    bool flipped = false;
    bool has_plus = false, has_minus = false;
    for (int j = 1; j <= d; ++j) {
        if (b_at(b, j) > m_scaled) has_plus = true;
        if (b_at(b, j) < -m_scaled) has_minus = true;
    }
    require(has_plus || has_minus, errc::invalid_params, "no entry exceeds M");
    if (!has_plus) {
        h.flip_polarity();
        flipped = true;
        b = b_scaled(h);
    }
    auto finish = [&](bool) {
        if (flipped) h.flip_polarity();
        return reduce_outcome{true, 0};
    };

    // A vertex of degree i-1 with i in A+ exists; any incident complement
    // edge either improves directly or certifies that A- is nonempty.
    auto params = compute_interval_params(b, m_scaled);
    int found_edge = -1;
    for (int v = 0; v < g.vertex_count() && found_edge < 0; ++v) {
        if (!g.vertex_alive(v)) continue;
        int i = h.h_degree(v) + 1;
        if (i > d || !params.in_plus[i]) continue;
        int best = -1;
        for (int e : g.incident(v))
            if (!h.member(e) && (best < 0 || e < best)) best = e;
        require(best >= 0, errc::internal_invariant, "degree i-1 vertex without complement edge");
        found_edge = best;
        int j = h.h_degree(g.other_end(best, v)) + 1;
        require(j <= d, errc::internal_invariant, "complement neighbor saturated");
        if (b_at(b, i) + b_at(b, j) > s) {
            improve_by_edge(h, best, edge_action::insert);
            return finish(true);
        }
        require(b_at(b, j) < -m_scaled, errc::internal_invariant,
                "window-free vector must push the pair into A-");
    }
    require(found_edge >= 0, errc::internal_invariant, "A+ nonempty but no vertex of degree i-1");

    auto cand = find_candidate(h, params);
    require(cand.has_value(), errc::internal_invariant, "the candidate disjunction must produce a hit");
    switch (cand->k) {
        case candidate::kind::edge_in_h:
            improve_by_edge(h, cand->edge, edge_action::remove);
            break;
        case candidate::kind::edge_in_complement:
            improve_by_edge(h, cand->edge, edge_action::insert);
            break;
        case candidate::kind::star_in_h:
        case candidate::kind::star_in_complement:
            improve_by_multistar(h, cand->star, params);
            break;
    }
    return finish(true);
}

bool improve_once(spanning_subgraph& h) {
    const int d = h.degree_cap();
    const int64_t s = d + 1;
    if (inf_norm(b_scaled(h)) <= (int64_t)d * d * s) return false;
    for (int t = d; t >= 1; --t) {
        auto out = reduce_step(h, (int64_t)t * d * s);
        if (out.improved) return true;
    }
    fail(errc::internal_invariant, "level descent exhausted (pigeonhole violated)");
}

spanning_subgraph make_initial(const multigraph& g, init_subgraph kind, uint64_t seed) {
    spanning_subgraph h(g);
    if (kind == init_subgraph::empty) return h;
    if (kind == init_subgraph::full) {
        h.flip_polarity();
        return h;
    }
    std::mt19937_64 rng(seed);
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.edge_alive(e) && (rng() & 1)) h.toggle_edge(e);
    return h;
}

solve_report solve_general(spanning_subgraph& h, general_options opt) {
    const int d = h.degree_cap();
    require(d >= 2, errc::degree_too_small, "solver needs d >= 2");
    const int64_t n = h.host().live_vertex_count();

    // improvement-sequence length bound, saturated: ((d+1)dn + 1) * ((d+1)n + 1)^(d-1)
    __int128 bound = (__int128)(d + 1) * d * n + 1;
    const __int128 cap = (__int128)1 << 90;
    for (int i = 0; i < d - 1 && bound < cap; ++i) bound *= ((__int128)(d + 1) * n + 1);

    solve_report rep;
    scaled_b prev = b_scaled(h);
    while (improve_once(h)) {
        scaled_b cur = b_scaled(h);
        auto kind = is_improvement(prev, cur);
        require(kind != improvement_kind::not_improvement, errc::internal_invariant,
                "solver step was not an improvement");
        if (kind == improvement_kind::type_a)
            ++rep.type_a_count;
        else
            ++rep.type_b_count;
        ++rep.improvement_count;
        require((__int128)rep.improvement_count <= bound, errc::internal_invariant,
                "improvement sequence exceeded the termination bound");
        if (opt.verify_steps) {
            auto fresh = b_scaled(h);
            require(fresh.entries == cur.entries, errc::internal_invariant, "vector drift");
        }
        prev = std::move(cur);
    }
    rep.final_b_inf = inf_norm(prev);
    require(rep.final_b_inf <= (int64_t)d * d * (d + 1), errc::internal_invariant,
            "post-guarantee violated");
    return rep;
}

std::pair<spanning_subgraph, solve_report> solve_general(const multigraph& g, init_subgraph init,
                                                         uint64_t seed, general_options opt) {
    auto d = g.regularity();
    require(d.has_value(), errc::not_regular, "solve_general");
    require(*d >= 2, errc::degree_too_small, "solver needs d >= 2");
    spanning_subgraph h = make_initial(g, init, seed);
    solve_report rep = solve_general(h, opt);
    return {std::move(h), rep};
}

} // namespace irrsub
