#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "irrsub/subgraph.hpp"

namespace irrsub {

// Scaled a-vector: entries[i] = (d+1)*m(H,i) - n, i = 0..d. Exact integers.
struct scaled_a {
    int d = 0;
    int64_t n = 0;
    std::vector<int64_t> entries;
};

// Scaled irregularity vector: entries[i-1] = b~_i for i = 1..d, with the
// implicit boundary values b~_0 = b~_{d+1} = 0.
struct scaled_b {
    std::vector<int64_t> entries;
    int d() const { return (int)entries.size(); }
};

int64_t b_at(const scaled_b& b, int i); // i in [0, d+1], boundary zeros

std::vector<int64_t> degree_profile(const spanning_subgraph& h);
scaled_a a_scaled(const spanning_subgraph& h);
scaled_b b_scaled(const spanning_subgraph& h);
scaled_a a_from_profile(int d, const std::vector<int64_t>& counts);
scaled_b b_from_a(const scaled_a& a);

int64_t abs_sum(const scaled_b& b);
int64_t inf_norm(const scaled_b& b);
int64_t inf_norm(const scaled_a& a);

// C(H): the |b~_i| multiset sorted ascending
std::vector<int64_t> sorted_c(const scaled_b& b);

enum class improvement_kind { type_a, type_b, not_improvement };
improvement_kind is_improvement(const scaled_b& before, const scaled_b& after);

// Complement identity: a'_i = a_{d-i}, b'_i = -b_{d+1-i}
std::pair<scaled_a, scaled_b> complement_vectors(const scaled_a& a, const scaled_b& b);

} // namespace irrsub
