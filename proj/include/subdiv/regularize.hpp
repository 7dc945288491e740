#ifndef SUBDIV_REGULARIZE_HPP
#define SUBDIV_REGULARIZE_HPP

#include "subdiv/graph.hpp"

namespace subdiv {

struct RegularizeParams {
    double alpha = 1.0 / 3.0; // density exponent, in (0,1)
    double c_density = 1.0;   // C in the precondition e(G) >= C n^(1+alpha)
    double k_target = 0.0;    // 0 means the default 60 * 2^(1 + 1/alpha^2)
    std::uint64_t seed = 0;
    std::uint32_t max_rounds = 0; // 0 means ceil(log2 n)

    double effective_k_target() const;
};

struct RegularizeReport {
    BipartiteGraph subgraph;
    // Original ids: subgraph A-vertex i is input vertex orig_a[i], B-vertex
    // num_a()+j is input vertex orig_b[j].
    std::vector<VertexId> orig_a;
    std::vector<VertexId> orig_b;
    std::uint32_t m = 0;        // vertex count of the subgraph
    double achieved_k = 0.0;    // max degree / min degree
    double density_ratio = 0.0; // e(subgraph) / m^(1+alpha)
    bool balanced = false;
    std::uint32_t rounds = 0;
};

// Extract a balanced, almost-regular bipartite subgraph: seeded balanced
// split improved to a locally maximal cut, then rounds of dyadic degree
// bucketing, best bucket-pair selection by e / m^(1+alpha), and trimming
// until the degree ratio reaches the target. TooSparse when the input
// misses e(G) >= C n^(1+alpha); DegenerateOutput when extraction collapses
// below 4 vertices.
RegularizeReport regularize(const GeneralGraph &g, const RegularizeParams &p);

// Recompute every derived field of the report from the stored subgraph and
// compare; false on any mismatch (tampering or stale report).
bool verify_regularization(const RegularizeReport &r,
                           const RegularizeParams &p);

} // namespace subdiv

#endif
