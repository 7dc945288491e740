#ifndef SUBDIV_EMBED_HPP
#define SUBDIV_EMBED_HPP

#include <optional>
#include <variant>

#include "subdiv/graph.hpp"
#include "subdiv/pattern.hpp"
#include "subdiv/regularize.hpp"
#include "subdiv/weights.hpp"

namespace subdiv {

// The embedding algorithm proper: pick t-1 branch vertices u_1..u_{t-1}
// whose pairs are all light, with empty triple common neighbourhoods and a
// large surviving candidate set at every step, then s more vertices v_1..v_s
// avoiding every forbidden triple, and route each pattern edge through its
// own midpoint. A heavy K_{s+t-1} shortcuts all of that when present.

struct EmbedParams {
    std::uint32_t s = 1;
    std::uint32_t t = 3;
    double k_ratio = 0.0; // degree-ratio bound K; 0 means max/min degree
    double c = 1.0;       // density constant (reported, not gated on)
    double slack = 1.0;   // multiplier on every counting threshold
};

// c * n^((t-2)/(2t-3)), the minimum-degree scale the counting steps need.
double delta_threshold(std::uint32_t s, std::uint32_t t, double c,
                       std::uint64_t n);

struct BranchStep {
    VertexId u = 0;
    std::uint64_t u0_size = 0;      // candidates light to all previous u's
    std::uint64_t u_size = 0;       // after removing forbidden-triple hits
    std::uint64_t light_degree = 0; // light edges from u into U
    std::uint64_t next_set = 0;     // candidates light to all u's incl. u
    double demanded = 0.0;          // slack * (d^2/(32(s+t)^3 n))^i * |A|
};

struct SVertexStep {
    VertexId v = 0;
    std::uint64_t bad_uu = 0; // forbidden via N(u_i) cap N(u_j) at accept time
    std::uint64_t bad_uv = 0; // forbidden via N(u_i) cap N(v_j)
};

struct EmbedTrace {
    double delta = 0.0;
    double k_ratio = 0.0;
    std::vector<BranchStep> branch;
    std::vector<SVertexStep> s_vertices;
    std::uint64_t v_set_size = 0; // |V| offered to the s-vertex stage
    double v_demanded = 0.0;      // the (C(t-1,2)+(t-1)(s-1))C(s+t-1,2)Kd gate
};

struct SubdivisionCertificate {
    // branch[i] hosts pattern vertex i (S0..S_{s-1}, T0..T_{t-2});
    // midpoints[j] hosts the midpoint of pattern edge j in Pattern order.
    std::vector<VertexId> branch;
    std::vector<VertexId> midpoints;
};

struct EmbedSuccess {
    SubdivisionCertificate certificate;
    EmbedTrace trace;
    bool via_heavy_clique = false;
};

// Candidate set fell below a counting threshold at a branch step. This is
// the structured "host too sparse or too subdivision-free here" outcome,
// not an exception.
struct ThresholdFailure {
    std::uint32_t step = 0;
    std::uint64_t set_size = 0;
    double demanded = 0.0;
    EmbedTrace trace;
};

// The scan of V ran out before s vertices were accepted.
struct SelectionFailure {
    std::uint32_t accepted = 0;
    std::uint64_t rejected_uu = 0;
    std::uint64_t rejected_uv = 0;
    std::uint64_t v_set_size = 0;
    double demanded = 0.0;
    EmbedTrace trace;
};

using EmbedResult =
    std::variant<EmbedSuccess, ThresholdFailure, SelectionFailure>;

// s+t-1 vertices of A pairwise joined by Heavy edges, ascending, or
// nullopt. Exact below clique size 7, budget-bounded beyond.
std::optional<std::vector<VertexId>>
find_heavy_clique(const NeighbourhoodWeights &w, std::uint32_t s,
                  std::uint32_t t, std::uint64_t budget = 0);

// The u_1..u_{t-1} stage. Returns the chosen vertices or a ThresholdFailure;
// the trace is filled either way.
std::variant<std::vector<VertexId>, ThresholdFailure>
find_branch_vertices(const BipartiteGraph &g, const NeighbourhoodWeights &w,
                     const EmbedParams &p, EmbedTrace &trace);

// The v_1..v_s stage. PreconditionFailed if some u-pair is not light.
std::variant<std::vector<VertexId>, SelectionFailure>
find_s_vertices(const BipartiteGraph &g, const NeighbourhoodWeights &w,
                std::span<const VertexId> us, const EmbedParams &p,
                EmbedTrace &trace);

enum class AssembleMode { LightPath, HeavyClique };

// Route every pattern edge through a midpoint. Light-path mode picks the
// smallest-id common neighbour outright; the emptiness conditions make
// collisions impossible, so one is reported as logic_error, not Error.
// Heavy-clique mode picks the smallest unused. InvalidBranchSet when some
// pattern edge has no (free) common neighbour.
SubdivisionCertificate
assemble_subdivision(const BipartiteGraph &g,
                     std::span<const VertexId> branch_images,
                     const Pattern &pattern, AssembleMode mode);

// Independent certificate checkers; no embedder state involved.
bool validate_certificate(const BipartiteGraph &g,
                          const SubdivisionCertificate &cert,
                          const Pattern &pattern);
bool validate_certificate(const GeneralGraph &g,
                          const SubdivisionCertificate &cert,
                          const Pattern &pattern);

// Full pipeline on a bipartite host: heavy shortcut, then the light path.
// PreconditionFailed when the host is unbalanced, has an isolated vertex,
// or violates the stated degree-ratio bound.
EmbedResult embed(const BipartiteGraph &g, const EmbedParams &p);

struct PipelineResult {
    RegularizeReport regularization;
    EmbedResult embedding; // certificate ids are ORIGINAL graph ids
};

// regularize() then embed(), with certificate ids translated back.
PipelineResult pipeline_embed(const GeneralGraph &g,
                              const RegularizeParams &rp,
                              const EmbedParams &ep);

} // namespace subdiv

#endif
