#ifndef SUBDIV_PATTERN_HPP
#define SUBDIV_PATTERN_HPP

#include <string>
#include <vector>

#include "subdiv/graph.hpp"

namespace subdiv {

// The pattern family this project revolves around: a clique on s+t-1
// vertices with the edges inside a distinguished s-set removed. Vertices
// 0..s-1 are the independent part ("S"), vertices s..s+t-2 are the t-1
// dominating vertices ("T"). Edge order is lexicographic in this labeling
// and is relied on by subdivide() and the certificate format.
struct Pattern {
    std::uint32_t s = 0;
    std::uint32_t t = 0;
    std::vector<Edge> edges;

    VertexId vertex_count() const { return s + t - 1; }
    std::uint64_t edge_count() const { return edges.size(); }

    // "S0".."S{s-1}", "T0".."T{t-2}"; used in certificates and reports.
    std::string vertex_name(VertexId v) const;
};

// s >= 1, t >= 3 (InvalidParams otherwise).
Pattern make_pattern(std::uint32_t s, std::uint32_t t);

GeneralGraph to_graph(const Pattern &p);

// Replace every edge by a length-2 path. Input vertices keep their ids;
// the midpoint of edge j gets id |V|+j, following the input edge order.
GeneralGraph subdivide(const GeneralGraph &g);
GeneralGraph subdivide(const Pattern &p);

// Complete bipartite K_{a,b} on a+b vertices (a-side first).
GeneralGraph biclique(std::uint32_t a, std::uint32_t b);

// Smallest pattern in the family whose graph contains K_{a,b}:
// s = b, t = a + 1.
Pattern pattern_containing_biclique(std::uint32_t a, std::uint32_t b);

} // namespace subdiv

#endif
