#pragma once

#include <cstdint>
#include <vector>

#include "irrsub/subgraph.hpp"

namespace irrsub {

struct edge_weighting {
    int s = 1;                             // weights lie in [1, s+1]
    std::vector<int> weights;              // per base edge
    std::vector<int64_t> weighted_degrees; // per base vertex
};

// Edge weighting f_H(e) = |E_e cap H| + 1 from a subgraph of the G^s
// blow-up of base (copy j of edge e must have id s*e + j).
edge_weighting weighting_from_subgraph(const multigraph& base, int s, const spanning_subgraph& h);

struct distinct_report {
    bool distinct = false;
    std::vector<int> duplicates; // vertices sharing a weighted degree
};

distinct_report verify_distinct(const edge_weighting& w);

} // namespace irrsub
