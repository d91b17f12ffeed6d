#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "irrsub/vectors.hpp"

namespace irrsub {

enum class edge_action { remove, insert };
enum class star_side { in_h, in_complement };

struct star_leaf {
    int vertex;
    int h_degree;           // effective degree at construction time
    std::vector<int> edges; // center-leaf edge ids, multiplicity = edges.size()
};

struct multi_star {
    int center = -1;
    int center_h_degree = 0;
    star_side side = star_side::in_h;
    std::vector<star_leaf> leaves;

    int edge_total() const {
        int m = 0;
        for (const auto& l : leaves) m += (int)l.edges.size();
        return m;
    }
};

// A+/A- index sets for a threshold alpha (scaled), with the run-distance
// parameters n_i, m_i. For i in A+: n_i/m_i are the least t > 0 with
// i+t resp. i-t outside A+; for i in A- the directions swap.
struct interval_params {
    int d = 0;
    int64_t alpha_scaled = 0;
    std::vector<uint8_t> in_plus;  // size d+2, sentinel false at 0 and d+1
    std::vector<uint8_t> in_minus;
    std::vector<int> n_i; // size d+1, 0 where undefined
    std::vector<int> m_i;
    std::vector<int> plus_list;
    std::vector<int> minus_list;
};

interval_params compute_interval_params(const scaled_b& b, int64_t alpha_scaled);

struct candidate {
    enum class kind { edge_in_h, edge_in_complement, star_in_h, star_in_complement };
    kind k = kind::edge_in_h;
    int edge = -1;
    int i = 0, j = 0; // for edge kinds: the clause indices
    multi_star star;
};

// Flip one edge and return the exact scaled b-delta: removing an
// H(i,j)-edge adds d+1 at indices i and j; inserting subtracts at i+1, j+1.
// remove requires the edge effectively in H, insert the opposite.
std::vector<int64_t> apply_edge(spanning_subgraph& h, int e, edge_action action);

// Flip all edges of a multi-star and return the scaled b-delta (the
// single-edge rule summed over the star). side=in_h deletes, in_complement adds.
std::vector<int64_t> apply_multistar(spanning_subgraph& h, const multi_star& star);

// Candidate disjunction scan: (I) H-edges, (II) complement edges, then the
// directed-selection star searches. Deterministic: lowest ids win.
std::optional<candidate> find_candidate(const spanning_subgraph& h, const interval_params& p);

// Cubic edge finders (guaranteed to succeed when 3a_3 > a_1 + 2a_2,
// resp. 3a_0 > 2a_1 + a_2); plain lowest-id scans.
std::optional<int> find_edge_33(const spanning_subgraph& h);
std::optional<int> find_edge_00_complement(const spanning_subgraph& h);

} // namespace irrsub
