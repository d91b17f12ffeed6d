#pragma once

#include <cstdint>
#include <utility>

#include "irrsub/adjust.hpp"

namespace irrsub {

struct solve_report {
    int64_t improvement_count = 0;
    int64_t type_a_count = 0;
    int64_t type_b_count = 0;
    int64_t final_b_inf = 0;
};

struct general_options {
    bool verify_steps = false; // recompute vectors from scratch and re-check every delta
};

// Apply one edge under the sign conditions that make it an improvement
// (delete: b_i < -1 and b_i + b_j < -1; insert mirrored) and verify it.
// Throws precondition_violated naming the failed inequality.
void improve_by_edge(spanning_subgraph& h, int e, edge_action action);

// Apply a star from clause (III)/(IV) under its side's hypothesis
// (b_{k-m_k} <= alpha - d for deletion, mirrored for addition).
void improve_by_multistar(spanning_subgraph& h, const multi_star& star, const interval_params& p);

struct reduce_outcome {
    bool improved = false;
    int window_index = 0; // j with |b~_j| in (M~ - d(d+1), M~], when !improved
};

// One reduction step for scaled M~ = M*(d+1), M >= d. Either reports a window index
// (no mutation) or constructs one improvement.
reduce_outcome reduce_step(spanning_subgraph& h, int64_t m_scaled);

// One improvement: false iff ||b~||_inf <= d^2 (d+1) already; otherwise
// descends M_t = t*d for t = d..1 and applies one improvement.
bool improve_once(spanning_subgraph& h);

enum class init_subgraph { empty, full, random };
spanning_subgraph make_initial(const multigraph& g, init_subgraph kind, uint64_t seed = 0);

// Full solve: iterate improvements until ||b~||_inf <= d^2 (d+1), which gives
// ||a~||_inf <= 2 d^2 (d+1). Requires a d-regular host with d >= 2.
std::pair<spanning_subgraph, solve_report> solve_general(const multigraph& g,
                                                         init_subgraph init = init_subgraph::empty,
                                                         uint64_t seed = 0,
                                                         general_options opt = {});

// Same, starting from an existing subgraph (mutated in place).
solve_report solve_general(spanning_subgraph& h, general_options opt = {});

} // namespace irrsub
