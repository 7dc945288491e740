#include "subdiv/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace subdiv {

namespace {

// Scratch for one row of the neighbour-of-neighbour scan: codegree counts
// of a fixed u against everything it shares a B-vertex with.
struct RowScratch {
    std::vector<std::uint32_t> count;
    std::vector<VertexId> touched;

    explicit RowScratch(VertexId n_a) : count(n_a, 0) {}

    void scan(const BipartiteGraph &g, VertexId u) {
        for (VertexId b : g.neighbors(u)) {
            for (VertexId v : g.neighbors(b)) {
                if (v == u)
                    continue;
                if (count[v]++ == 0)
                    touched.push_back(v);
            }
        }
    }

    void reset() {
        for (VertexId v : touched)
            count[v] = 0;
        touched.clear();
    }
};

std::vector<WeightEntry> row_from_scratch(RowScratch &s) {
    std::sort(s.touched.begin(), s.touched.end());
    std::vector<WeightEntry> row;
    row.reserve(s.touched.size());
    for (VertexId v : s.touched)
        row.push_back({v, s.count[v]});
    return row;
}

} // namespace

NeighbourhoodWeights neighbourhood_weights_serial(const BipartiteGraph &g) {
    const VertexId n_a = g.num_a();
    std::vector<std::vector<WeightEntry>> rows(n_a);
    RowScratch scratch(n_a);
    for (VertexId u = 0; u < n_a; ++u) {
        scratch.scan(g, u);
        rows[u] = row_from_scratch(scratch);
        scratch.reset();
    }
    return NeighbourhoodWeights::from_rows(std::move(rows));
}

NeighbourhoodWeights neighbourhood_weights(const BipartiteGraph &g) {
#ifdef _OPENMP
    const VertexId n_a = g.num_a();
    std::vector<std::vector<WeightEntry>> rows(n_a);
#pragma omp parallel
    {
        RowScratch scratch(n_a);
#pragma omp for schedule(dynamic, 64)
        for (std::int64_t u = 0; u < static_cast<std::int64_t>(n_a); ++u) {
            scratch.scan(g, static_cast<VertexId>(u));
            rows[static_cast<std::size_t>(u)] = row_from_scratch(scratch);
            scratch.reset();
        }
    }
    return NeighbourhoodWeights::from_rows(std::move(rows));
#else
    return neighbourhood_weights_serial(g);
#endif
}

std::uint32_t max_codegree_serial(const BipartiteGraph &g) {
    const VertexId n_a = g.num_a();
    std::uint32_t best = 0;
    RowScratch scratch(n_a);
    for (VertexId u = 0; u < n_a; ++u) {
        scratch.scan(g, u);
        for (VertexId v : scratch.touched)
            best = std::max(best, scratch.count[v]);
        scratch.reset();
    }
    return best;
}

std::uint32_t max_codegree(const BipartiteGraph &g) {
#ifdef _OPENMP
    const VertexId n_a = g.num_a();
    std::uint32_t best = 0;
#pragma omp parallel reduction(max : best)
    {
        RowScratch scratch(n_a);
#pragma omp for schedule(dynamic, 64)
        for (std::int64_t u = 0; u < static_cast<std::int64_t>(n_a); ++u) {
            scratch.scan(g, static_cast<VertexId>(u));
            for (VertexId v : scratch.touched)
                best = std::max(best, scratch.count[v]);
            scratch.reset();
        }
    }
    return best;
#else
    return max_codegree_serial(g);
#endif
}

namespace {

std::uint64_t wedge_sum_masked(const BipartiteGraph &g,
                               const std::vector<std::uint8_t> &mask,
                               VertexId b_first, VertexId b_last) {
    std::uint64_t sum = 0;
    for (VertexId b = b_first; b < b_last; ++b) {
        std::uint64_t k = 0;
        for (VertexId v : g.neighbors(b))
            k += mask[v];
        sum += choose2(k);
    }
    return sum;
}

} // namespace

std::uint64_t total_weight_in_serial(const BipartiteGraph &g,
                                     std::span<const VertexId> u_set) {
    const auto mask = detail::subset_mask(g.num_a(), u_set);
    return wedge_sum_masked(g, mask, g.num_a(), g.num_vertices());
}

std::uint64_t total_weight_in(const BipartiteGraph &g,
                              std::span<const VertexId> u_set) {
#ifdef _OPENMP
    const auto mask = detail::subset_mask(g.num_a(), u_set);
    std::uint64_t sum = 0;
    const std::int64_t lo = g.num_a(), hi = g.num_vertices();
#pragma omp parallel for reduction(+ : sum) schedule(static)
    for (std::int64_t b = lo; b < hi; ++b) {
        std::uint64_t k = 0;
        for (VertexId v : g.neighbors(static_cast<VertexId>(b)))
            k += mask[v];
        sum += choose2(k);
    }
    return sum;
#else
    return total_weight_in_serial(g, u_set);
#endif
}

namespace {

// Light pairs incident to u (counting only partners v > u to avoid double
// counting) via one neighbour-of-neighbour scan.
std::uint64_t light_pairs_above(const BipartiteGraph &g, RowScratch &scratch,
                                const std::vector<std::uint8_t> &mask,
                                VertexId u, std::uint64_t threshold) {
    for (VertexId b : g.neighbors(u))
        for (VertexId v : g.neighbors(b))
            if (v > u && mask[v] && scratch.count[v]++ == 0)
                scratch.touched.push_back(v);
    std::uint64_t light = 0;
    for (VertexId v : scratch.touched)
        if (scratch.count[v] < threshold)
            ++light;
    scratch.reset();
    return light;
}

} // namespace

std::uint64_t light_edges_in_serial(const BipartiteGraph &g,
                                    std::span<const VertexId> u_set,
                                    std::uint64_t threshold,
                                    std::uint32_t max_codeg_hint) {
    if (threshold <= 1)
        return 0;
    if (max_codeg_hint == 1)
        return total_weight_in_serial(g, u_set);
    const auto mask = detail::subset_mask(g.num_a(), u_set);
    RowScratch scratch(g.num_a());
    std::uint64_t light = 0;
    for (VertexId u : u_set)
        light += light_pairs_above(g, scratch, mask, u, threshold);
    return light;
}

std::uint64_t light_edges_in(const BipartiteGraph &g,
                             std::span<const VertexId> u_set,
                             std::uint64_t threshold,
                             std::uint32_t max_codeg_hint) {
#ifdef _OPENMP
    if (threshold <= 1)
        return 0;
    if (max_codeg_hint == 1)
        return total_weight_in(g, u_set);
    const auto mask = detail::subset_mask(g.num_a(), u_set);
    std::uint64_t light = 0;
    const std::int64_t k = static_cast<std::int64_t>(u_set.size());
#pragma omp parallel reduction(+ : light)
    {
        RowScratch scratch(g.num_a());
#pragma omp for schedule(dynamic, 64)
        for (std::int64_t i = 0; i < k; ++i)
            light += light_pairs_above(g, scratch, mask, u_set[i], threshold);
    }
    return light;
#else
    return light_edges_in_serial(g, u_set, threshold, max_codeg_hint);
#endif
}

std::uint64_t wedge_count(const BipartiteGraph &g) {
    std::uint64_t sum = 0;
    for (VertexId b = g.num_a(); b < g.num_vertices(); ++b)
        sum += choose2(g.degree(b));
    return sum;
}

} // namespace subdiv
