#ifndef SUBDIV_CONSTRUCTIONS_HPP
#define SUBDIV_CONSTRUCTIONS_HPP

#include <utility>

#include "subdiv/graph.hpp"

namespace subdiv {

// Host-graph generators. Everything here is deterministic per (parameters,
// seed); the randomized ones share the project RNG.

// Each A-B pair independently with probability p.
BipartiteGraph random_bipartite(VertexId n_a, VertexId n_b, double p,
                                std::uint64_t seed);

struct DeletionReport {
    std::uint32_t n = 0;
    std::uint32_t t = 0;
    double factor = 1.0; // multiplier on the first-moment density
    double p = 0.0;      // factor * n^(-(t-3/2)/(t^2-t-1) - 1/2), clamped
    std::uint64_t initial_edges = 0;
    std::uint64_t edges_deleted = 0;
    std::uint64_t final_edges = 0;
    double target_exponent = 0.0; // 3/2 - (t-3/2)/(t^2-t-1)
    double reference = 0.0;       // n^target_exponent
    double ratio = 0.0;           // final_edges / reference
    bool exact = true;            // every copy of the subdivision destroyed
    bool oracle_verified = false; // independent containment search said No
};

// Exponent of the deletion-method lower bound, as a double. The exact
// rational version lives with the bound table.
double deletion_exponent(std::uint32_t t);

// Probabilistic deletion: sample G(n, p) at the first-moment density, then
// destroy every copy of the 1-subdivision of K_t by deleting one edge per
// copy. For t = 3 the copies are 6-cycles and are listed outright; for
// t >= 4 a search-delete-repeat loop runs under the default node budget
// (TooLarge if the budget runs out before freeness is reached).
std::pair<GeneralGraph, DeletionReport>
deletion_lower_bound(std::uint32_t n, std::uint32_t t, std::uint64_t seed,
                     double factor = 1.0);

// Point-line incidence graph of the symplectic generalized quadrangle over
// the prime field F_q: A = the (q^2+1)(q+1) points of projective 3-space,
// B = the totally isotropic lines of the alternating form
// B(x,y) = x0 y3 - x3 y0 + x1 y2 - x2 y1. Both sides are (q+1)-regular and
// the girth is 8, so the output is C6-free. InvalidParameter unless q is
// prime; TooLarge above q = 47.
BipartiteGraph gq_incidence(std::uint32_t q);

} // namespace subdiv

#endif
