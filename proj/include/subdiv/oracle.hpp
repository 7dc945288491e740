#ifndef SUBDIV_ORACLE_HPP
#define SUBDIV_ORACLE_HPP

#include <optional>

#include "subdiv/graph.hpp"
#include "subdiv/pattern.hpp"
#include "subdiv/weights.hpp"

namespace subdiv {

// Ground-truth searches. These are deliberately independent of the embedder:
// nothing here looks at codegree classes or selection traces.

enum class SearchStatus { Yes, No, BudgetExceeded };

struct SearchResult {
    SearchStatus status = SearchStatus::No;
    // H-vertex -> G-vertex, present iff status == Yes.
    std::optional<std::vector<VertexId>> witness;
    std::uint64_t nodes = 0;
};

// Node budget for backtracking searches: SUBDIVLAB_BUDGET from the
// environment when set, otherwise 50M nodes.
std::uint64_t default_budget();

// Does G contain a (not necessarily induced) copy of H? Pruned backtracking
// over a connectivity-aware static vertex order; deterministic: candidates
// are tried in ascending id order and the budget is a node count.
SearchResult contains_subgraph(const GeneralGraph &g, const GeneralGraph &h,
                               std::uint64_t budget = default_budget());

// Copy of the 1-subdivision of the pattern (or of an arbitrary base graph).
SearchResult contains_subdivision(const GeneralGraph &g, const Pattern &p,
                                  std::uint64_t budget = default_budget());
SearchResult contains_subdivision(const GeneralGraph &g,
                                  const GeneralGraph &base,
                                  std::uint64_t budget = default_budget());

// Exact isomorphism test (refinement-guided backtracking). Intended for the
// small graphs this project enumerates (tested up to 14 vertices).
bool graph_isomorphic(const GeneralGraph &a, const GeneralGraph &b);

// Exact girth >= 8 certificate for bipartite hosts that is feasible on
// hosts far too large for the all-roots BFS: no C4 as codegree <= 1, then
// no C6 by an anchor-stamping scan over B-vertices.
bool bipartite_girth_at_least_8(const BipartiteGraph &g);

enum class ExtremalMode { Exhaustive, Pruned };

struct ExtremalRecord {
    std::uint32_t n = 0;
    std::uint64_t value = 0;
    GeneralGraph witness;
    bool witness_verified = false; // witness is H-free with `value` edges
    std::uint64_t nodes = 0;
};

// Largest edge count of an H-free graph on n vertices.
// Exhaustive: DFS over all 2^C(n,2) edge subsets with the two sound prunes
//   (supersets of a hit are hits; cannot-beat-best). n <= 10.
// Pruned: vertex-incremental search with isomorph rejection, using degree
//   sequence / neighbourhood refinement invariants for bucketing and exact
//   isomorphism tests inside buckets. n <= 14.
ExtremalRecord extremal_number(std::uint32_t n, const GeneralGraph &h,
                               ExtremalMode mode);
ExtremalRecord extremal_number(std::uint32_t n, const Pattern &p,
                               ExtremalMode mode);

struct LemmaCheck {
    bool holds = false;
    double lhs = 0.0; // measured quantity
    double rhs = 0.0; // bound demanded of it
};

// W(U) >= delta^2/(2n) * C(|U|,2).
// pre: every A-degree >= delta and delta*|U| >= 2n (PreconditionFailed).
LemmaCheck check_locallydense(const BipartiteGraph &g,
                              std::span<const VertexId> u_set, double delta);

// Light pairs across A >= W(A)/(4(s+t)^3).
// pre: W(A) >= 8(s+t)^2 n; freeness of the host is caller-asserted.
LemmaCheck check_manylight(const BipartiteGraph &g, std::uint32_t s,
                           std::uint32_t t);

struct TuranCheck {
    bool holds = false; // light count meets both bounds below
    std::uint64_t light = 0;
    double bound_weak = 0.0;   // k^2 / (4(s+t-2))
    double bound_strong = 0.0; // (s+t-2) * C(k/(s+t-2), 2), real-valued
};

// Light pairs inside N(b) for a B-vertex b of degree k >= 2(s+t-2).
TuranCheck check_turan_step(const BipartiteGraph &g, VertexId b,
                            std::uint32_t s, std::uint32_t t);

// Light pairs inside U >= delta^2/(8(s+t)^3 n) * C(|U|,2).
// pre: every A-degree >= delta, |U| >= 8(s+t)n/delta, |U| >= 2.
// max_codeg_hint as in light_edges_in.
LemmaCheck check_lightcorollary(const BipartiteGraph &g,
                                std::span<const VertexId> u_set,
                                std::uint32_t s, std::uint32_t t, double delta,
                                std::uint32_t max_codeg_hint = 0);

} // namespace subdiv

#endif
