#include "subdiv/weights.hpp"

#include <algorithm>
#include <string>

namespace subdiv {

NeighbourhoodWeights
NeighbourhoodWeights::from_rows(std::vector<std::vector<WeightEntry>> &&rows) {
    NeighbourhoodWeights w;
    w.n_a_ = static_cast<VertexId>(rows.size());
    w.ptr_.assign(rows.size() + 1, 0);
    std::uint64_t total = 0;
    for (std::size_t u = 0; u < rows.size(); ++u) {
        total += rows[u].size();
        w.ptr_[u + 1] = total;
    }
    w.entries_.reserve(total);
    for (auto &row : rows) {
        w.entries_.insert(w.entries_.end(), row.begin(), row.end());
        row.clear();
        row.shrink_to_fit();
    }
    return w;
}

std::uint32_t NeighbourhoodWeights::weight(VertexId u, VertexId v) const {
    if (u >= n_a_ || v >= n_a_ || u == v)
        fail(ErrorCode::InvalidPair, "weight of invalid pair " +
                                         std::to_string(u) + " " +
                                         std::to_string(v));
    const auto r = row(u);
    auto it = std::lower_bound(
        r.begin(), r.end(), v,
        [](const WeightEntry &e, VertexId x) { return e.v < x; });
    if (it == r.end() || it->v != v)
        return 0;
    return it->w;
}

std::uint64_t NeighbourhoodWeights::pair_count() const {
    return entries_.size() / 2;
}

std::uint32_t NeighbourhoodWeights::max_weight() const {
    std::uint32_t best = 0;
    for (const auto &e : entries_)
        best = std::max(best, e.w);
    return best;
}

std::uint64_t light_threshold(std::uint32_t s, std::uint32_t t) {
    return choose2(std::uint64_t{s} + t - 1);
}

EdgeClass classify_edge(const NeighbourhoodWeights &w, VertexId u, VertexId v,
                        std::uint32_t s, std::uint32_t t) {
    const std::uint32_t cw = w.weight(u, v);
    if (cw == 0)
        return EdgeClass::Absent;
    return cw < light_threshold(s, t) ? EdgeClass::Light : EdgeClass::Heavy;
}

std::uint64_t codegree(const BipartiteGraph &g, VertexId u, VertexId v) {
    if (!g.in_a(u) || !g.in_a(v) || u == v)
        fail(ErrorCode::InvalidPair, "codegree of invalid pair " +
                                         std::to_string(u) + " " +
                                         std::to_string(v));
    const auto nu = g.neighbors(u);
    const auto nv = g.neighbors(v);
    std::uint64_t count = 0;
    std::size_t i = 0, j = 0;
    while (i < nu.size() && j < nv.size()) {
        if (nu[i] < nv[j])
            ++i;
        else if (nu[i] > nv[j])
            ++j;
        else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

namespace detail {

// Validates U ⊆ A with no repeats and returns a membership mask over A.
std::vector<std::uint8_t> subset_mask(VertexId n_a,
                                      std::span<const VertexId> u_set) {
    std::vector<std::uint8_t> mask(n_a, 0);
    for (VertexId u : u_set) {
        if (u >= n_a)
            fail(ErrorCode::InvalidSubset,
                 "subset vertex outside part A: " + std::to_string(u));
        if (mask[u])
            fail(ErrorCode::InvalidSubset,
                 "subset repeats vertex " + std::to_string(u));
        mask[u] = 1;
    }
    return mask;
}

} // namespace detail

std::uint64_t total_weight(const NeighbourhoodWeights &w,
                           std::span<const VertexId> u_set) {
    const auto mask = detail::subset_mask(w.num_a(), u_set);
    std::uint64_t sum = 0;
    for (VertexId u : u_set)
        for (const auto &e : w.row(u))
            if (e.v > u && mask[e.v])
                sum += e.w;
    return sum;
}

} // namespace subdiv
