#pragma once

#include <cstdint>

#include "irrsub/multigraph.hpp"

namespace irrsub {

multigraph make_k2k(int k);                  // two vertices, k parallel edges
multigraph make_complete_bipartite(int d);   // K_{d,d}
multigraph make_cycle(int n);                // C_n (n = 2 gives a doubled edge)
multigraph make_petersen();
multigraph make_k4();
// G^s blow-up; copy j of base edge e gets id s*e + j
multigraph make_doubled(const multigraph& base, int s);
multigraph make_disjoint_union(const multigraph& g, int copies);

// configuration/pairing model; loops repaired by re-drawing the offending
// pairs. Deterministic per seed. Requires n >= 2, d >= 1, n*d even.
multigraph random_regular(int n, int d, uint64_t seed);

struct generator_spec {
    enum class family { k2k, complete_bipartite, doubled, cycle, disjoint_union, random_regular, petersen, k4 };
    family fam = family::k2k;
    int a = 0;                        // primary parameter (k, d, n, s, copies)
    int b = 0;                        // secondary (d for random_regular)
    uint64_t seed = 0;                // random_regular only
    const multigraph* base = nullptr; // doubled / disjoint_union
};

multigraph generate(const generator_spec& spec);

} // namespace irrsub
