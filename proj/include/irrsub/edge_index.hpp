#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "irrsub/subgraph.hpp"

namespace irrsub {

// Bucket index over a cubic host: P_ij / Q_ij edge families plus the
// S_{(i;1,1)} star-center sets for both sides, all keyed on raw state so a
// polarity flip is a pure reinterpretation. Updates are O(1) per local
// change; queries return an arbitrary (deterministic) member.
class edge_index {
public:
    edge_index() = default;
    void build(const multigraph& g, const spanning_subgraph& h);
    bool built() const { return g_ != nullptr; }

    // effective H(i,j)-edge in H / in the complement
    std::optional<int> pick_p(int i, int j) const;
    std::optional<int> pick_q(int i, int j) const;

    struct star2 {
        int center;
        std::array<int, 2> edges;
    };
    // effective S_{(i;1,1)}(H) / S_{(i;1,1)}(G\H) path, i in {2,3}
    std::optional<star2> pick_star_h(int center_degree) const;
    std::optional<star2> pick_star_c(int center_degree) const;

    // maintenance hooks; callers keep (g, h) updated first
    void place_edge(int e);        // re-key a live edge, or drop a dead one
    void refresh_vertex(int v);    // re-evaluate star-center membership
    void refresh_around(int v);    // edges at v, then v and its neighbors
    void drop_edge(int e);         // call when an edge dies

    uint64_t update_count() const { return updates_; }
    bool matches_rebuild() const;  // recompute from scratch and compare

private:
    static int pair_key(bool member, int a, int b);
    int complement_degree(int v) const;
    std::optional<star2> extract_star(bool raw_member_side, const std::vector<int>& set) const;
    void set_insert(std::vector<int>& set, std::vector<int>& pos, int v);
    void set_erase(std::vector<int>& set, std::vector<int>& pos, int v);

    const multigraph* g_ = nullptr;
    const spanning_subgraph* h_ = nullptr;
    std::array<std::vector<int>, 32> buckets_;
    std::vector<int8_t> edge_key_;
    std::vector<int> edge_pos_;
    // star-center sets: [0]=H-side deg2, [1]=H-side deg3, [2]=C-side deg2, [3]=C-side deg3
    std::array<std::vector<int>, 4> star_sets_;
    std::array<std::vector<int>, 4> star_pos_;
    uint64_t updates_ = 0;
};

} // namespace irrsub
