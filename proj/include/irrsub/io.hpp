#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "irrsub/subgraph.hpp"

namespace irrsub {

// Graph file: line 1 "p mgraph <n> <m>", then m lines "e <u> <v>" with
// 0-based vertex ids; edge id = line order. Round-trip is byte-exact.
std::string serialize_graph(const multigraph& g);
multigraph parse_graph(std::string_view text);

// Subgraph file: line 1 "s <count>", line 2 member edge ids ascending.
std::string serialize_subgraph(const spanning_subgraph& h);
std::vector<int> parse_subgraph(std::string_view text, int edge_count);

// Degree report: one "k <i> <m(H,i)>" line per class, then
// "anorm <max|a~_i|> scale <d+1>".
std::string degree_report(const spanning_subgraph& h);

} // namespace irrsub
