#include "irrsub/vectors.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

namespace { inline int64_t iabs(int64_t x) { return x < 0 ? -x : x; } }

namespace irrsub {

int64_t b_at(const scaled_b& b, int i) {
    if (i == 0 || i == b.d() + 1) return 0;
    require(i >= 1 && i <= b.d(), errc::index_out_of_range, "b index " + std::to_string(i));
    return b.entries[i - 1];
}

std::vector<int64_t> degree_profile(const spanning_subgraph& h) { return h.profile(); }

scaled_a a_from_profile(int d, const std::vector<int64_t>& counts) {
    scaled_a a;
    a.d = d;
    a.n = 0;
    for (int64_t c : counts) a.n += c;
    a.entries.resize(d + 1);
    for (int i = 0; i <= d; ++i) a.entries[i] = (int64_t)(d + 1) * counts[i] - a.n;
    return a;
}

scaled_a a_scaled(const spanning_subgraph& h) {
    return a_from_profile(h.degree_cap(), h.profile());
}

scaled_b b_from_a(const scaled_a& a) {
    scaled_b b;
    b.entries.resize(a.d);
    int64_t acc = 0;
    for (int i = 0; i < a.d; ++i) {
        acc += a.entries[i];
        b.entries[i] = acc;
    }
    assert(acc + a.entries[a.d] == 0);
    return b;
}

scaled_b b_scaled(const spanning_subgraph& h) { return b_from_a(a_scaled(h)); }

int64_t abs_sum(const scaled_b& b) {
    int64_t s = 0;
    for (int64_t x : b.entries) s += iabs(x);
    return s;
}

int64_t inf_norm(const scaled_b& b) {
    int64_t m = 0;
    for (int64_t x : b.entries) m = std::max(m, iabs(x));
    return m;
}

int64_t inf_norm(const scaled_a& a) {
    int64_t m = 0;
    for (int64_t x : a.entries) m = std::max(m, iabs(x));
    return m;
}

std::vector<int64_t> sorted_c(const scaled_b& b) {
    std::vector<int64_t> c;
    c.reserve(b.entries.size());
    for (int64_t x : b.entries) c.push_back(iabs(x));
    std::sort(c.begin(), c.end());
    return c;
}

improvement_kind is_improvement(const scaled_b& before, const scaled_b& after) {
    require(before.d() == after.d(), errc::dimension_mismatch, "is_improvement");
    int64_t sb = abs_sum(before), sa = abs_sum(after);
    if (sa < sb) return improvement_kind::type_a;
    if (sa > sb) return improvement_kind::not_improvement;
    auto cb = sorted_c(before), ca = sorted_c(after);
    if (std::lexicographical_compare(cb.begin(), cb.end(), ca.begin(), ca.end()))
        return improvement_kind::type_b;
    return improvement_kind::not_improvement;
}

std::pair<scaled_a, scaled_b> complement_vectors(const scaled_a& a, const scaled_b& b) {
    scaled_a a2 = a;
    std::reverse(a2.entries.begin(), a2.entries.end());
    scaled_b b2 = b;
    for (int i = 1; i <= b.d(); ++i) b2.entries[i - 1] = -b_at(b, b.d() + 1 - i);
    return {std::move(a2), std::move(b2)};
}

} // namespace irrsub
