#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "irrsub/vectors.hpp"

namespace irrsub {

struct oracle_result {
    int64_t best_scaled_inf_norm = 0;
    std::vector<int> witness; // member edge ids of one optimal subgraph
    uint64_t subgraph_count = 0;
};

inline constexpr int oracle_edge_budget = 26;

// Exact min over all 2^m spanning subgraphs of max_i |a~_i|, by Gray-code
// enumeration with incremental degree updates. Ties resolved toward the
// numerically smallest membership bitmask.
oracle_result oracle_best(const multigraph& g);

// First subgraph in enumeration order whose scaled a-vector satisfies pred.
std::optional<std::vector<int>> oracle_state_exists(
    const multigraph& g, const std::function<bool(const scaled_a&)>& pred);

} // namespace irrsub
