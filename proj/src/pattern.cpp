#include "subdiv/pattern.hpp"

namespace subdiv {

std::string Pattern::vertex_name(VertexId v) const {
    if (v < s)
        return "S" + std::to_string(v);
    return "T" + std::to_string(v - s);
}

Pattern make_pattern(std::uint32_t s, std::uint32_t t) {
    if (s < 1)
        fail(ErrorCode::InvalidParams, "pattern needs s >= 1");
    if (t < 3)
        fail(ErrorCode::InvalidParams, "pattern needs t >= 3");
    Pattern p;
    p.s = s;
    p.t = t;
    const VertexId n = p.vertex_count();
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (!(u < s && v < s)) // no edges inside the independent set
                p.edges.emplace_back(u, v);
    return p;
}

GeneralGraph to_graph(const Pattern &p) {
    return GeneralGraph::build(p.vertex_count(), p.edges);
}

GeneralGraph subdivide(const GeneralGraph &g) {
    const auto base_edges = g.edges();
    std::vector<Edge> out;
    out.reserve(base_edges.size() * 2);
    VertexId mid = g.num_vertices();
    for (const auto &[u, v] : base_edges) {
        out.emplace_back(u, mid);
        out.emplace_back(v, mid);
        ++mid;
    }
    return GeneralGraph::build(mid, out);
}

GeneralGraph subdivide(const Pattern &p) { return subdivide(to_graph(p)); }

GeneralGraph biclique(std::uint32_t a, std::uint32_t b) {
    if (a == 0 || b == 0)
        fail(ErrorCode::InvalidParams, "biclique needs a, b >= 1");
    std::vector<Edge> edges;
    edges.reserve(std::uint64_t{a} * b);
    for (VertexId u = 0; u < a; ++u)
        for (VertexId v = 0; v < b; ++v)
            edges.emplace_back(u, a + v);
    return GeneralGraph::build(a + b, edges);
}

Pattern pattern_containing_biclique(std::uint32_t a, std::uint32_t b) {
    if (a == 0 || b == 0)
        fail(ErrorCode::InvalidParams, "biclique needs a, b >= 1");
    if (a + 1 < 3)
        fail(ErrorCode::InvalidParams, "biclique mapping needs a >= 2");
    return make_pattern(b, a + 1);
}

} // namespace subdiv
