#ifndef SUBDIV_KERNELS_HPP
#define SUBDIV_KERNELS_HPP

#include "subdiv/graph.hpp"
#include "subdiv/weights.hpp"

namespace subdiv {

// Counting kernels over the codegree structure. Each has an OpenMP-parallel
// entry point (the unsuffixed name; falls back to the serial loop when built
// without OpenMP) and a plain serial reference used by the equality tests
// and the benchmark. All parallel reductions are integer sums, maxima, or
// independent row fills, so results do not depend on scheduling.

// Full codegree structure, enumerating wedges u-b-v through B grouped by u.
// Cost sum_b deg(b)^2.
NeighbourhoodWeights neighbourhood_weights(const BipartiteGraph &g);
NeighbourhoodWeights neighbourhood_weights_serial(const BipartiteGraph &g);

// Largest codegree over all A-pairs, without materializing the structure.
std::uint32_t max_codegree(const BipartiteGraph &g);
std::uint32_t max_codegree_serial(const BipartiteGraph &g);

// W(U) without the structure: sum_b C(|N(b) ∩ U|, 2). Every wedge with both
// feet in U contributes exactly one to some pair's codegree, so this equals
// total_weight(neighbourhood_weights(g), U).
std::uint64_t total_weight_in(const BipartiteGraph &g,
                              std::span<const VertexId> u_set);
std::uint64_t total_weight_in_serial(const BipartiteGraph &g,
                                     std::span<const VertexId> u_set);

// Number of pairs inside U with codegree in [1, threshold). When the caller
// knows the host-wide max codegree is 1 (max_codeg_hint == 1), every wedge
// is a distinct pair and the count collapses to the W(U) arithmetic above;
// otherwise pair multiplicities are accumulated per row.
std::uint64_t light_edges_in(const BipartiteGraph &g,
                             std::span<const VertexId> u_set,
                             std::uint64_t threshold,
                             std::uint32_t max_codeg_hint = 0);
std::uint64_t light_edges_in_serial(const BipartiteGraph &g,
                                    std::span<const VertexId> u_set,
                                    std::uint64_t threshold,
                                    std::uint32_t max_codeg_hint = 0);

// sum_b C(deg(b), 2); equals the total weight over all of A.
std::uint64_t wedge_count(const BipartiteGraph &g);

} // namespace subdiv

#endif
