#include "subdiv/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

namespace subdiv {

const char *error_code_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::InvalidEdge: return "InvalidEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::InvalidPair: return "InvalidPair";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::InvalidSubset: return "InvalidSubset";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::InvalidBranchSet: return "InvalidBranchSet";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::TooSparse: return "TooSparse";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DegenerateOutput: return "DegenerateOutput";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

namespace {

// Shared CSR assembly: counts, prefix sums, fill, per-list sort, then a
// duplicate scan. `edges` must already be validated and oriented.
void build_csr(VertexId n, const std::vector<Edge> &edges,
               std::vector<std::uint64_t> &ptr, std::vector<VertexId> &adj) {
    ptr.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const auto &[u, v] : edges) {
        ++ptr[u + 1];
        ++ptr[v + 1];
    }
    for (VertexId v = 0; v < n; ++v)
        ptr[v + 1] += ptr[v];
    adj.resize(edges.size() * 2);
    std::vector<std::uint64_t> cursor(ptr.begin(), ptr.end() - 1);
    for (const auto &[u, v] : edges) {
        adj[cursor[u]++] = v;
        adj[cursor[v]++] = u;
    }
    for (VertexId v = 0; v < n; ++v) {
        auto first = adj.begin() + static_cast<std::ptrdiff_t>(ptr[v]);
        auto last = adj.begin() + static_cast<std::ptrdiff_t>(ptr[v + 1]);
        std::sort(first, last);
        if (std::adjacent_find(first, last) != last)
            fail(ErrorCode::DuplicateEdge,
                 "duplicate edge at vertex " + std::to_string(v));
    }
}

bool sorted_contains(std::span<const VertexId> list, VertexId x) {
    return std::binary_search(list.begin(), list.end(), x);
}

} // namespace

BipartiteGraph BipartiteGraph::build(VertexId n_a, VertexId n_b,
                                     std::span<const Edge> edges) {
    BipartiteGraph g;
    g.n_a_ = n_a;
    g.n_b_ = n_b;
    g.m_ = edges.size();
    const VertexId n = n_a + n_b;
    std::vector<Edge> oriented;
    oriented.reserve(edges.size());
    for (const auto &[x, y] : edges) {
        if (x >= n || y >= n)
            fail(ErrorCode::InvalidEdge, "vertex id out of range: " +
                                             std::to_string(x) + " " +
                                             std::to_string(y));
        const bool xa = x < n_a, ya = y < n_a;
        if (xa == ya)
            fail(ErrorCode::InvalidEdge, "edge inside one part: " +
                                             std::to_string(x) + " " +
                                             std::to_string(y));
        oriented.emplace_back(xa ? x : y, xa ? y : x);
    }
    build_csr(n, oriented, g.ptr_, g.adj_);
    return g;
}

bool BipartiteGraph::has_edge(VertexId u, VertexId v) const {
    if (u >= num_vertices() || v >= num_vertices())
        return false;
    if (degree(u) > degree(v))
        std::swap(u, v);
    return sorted_contains(neighbors(u), v);
}

std::vector<Edge> BipartiteGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (VertexId a = 0; a < n_a_; ++a)
        for (VertexId b : neighbors(a))
            out.emplace_back(a, b);
    return out;
}

GeneralGraph GeneralGraph::build(VertexId n, std::span<const Edge> edges) {
    GeneralGraph g;
    g.n_ = n;
    g.m_ = edges.size();
    std::vector<Edge> oriented;
    oriented.reserve(edges.size());
    for (const auto &[x, y] : edges) {
        if (x >= n || y >= n)
            fail(ErrorCode::InvalidEdge, "vertex id out of range: " +
                                             std::to_string(x) + " " +
                                             std::to_string(y));
        if (x == y)
            fail(ErrorCode::InvalidEdge, "loop at " + std::to_string(x));
        oriented.emplace_back(std::min(x, y), std::max(x, y));
    }
    build_csr(n, oriented, g.ptr_, g.adj_);
    return g;
}

bool GeneralGraph::has_edge(VertexId u, VertexId v) const {
    if (u >= n_ || v >= n_)
        return false;
    if (degree(u) > degree(v))
        std::swap(u, v);
    return sorted_contains(neighbors(u), v);
}

std::vector<Edge> GeneralGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (VertexId u = 0; u < n_; ++u)
        for (VertexId v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

DegreeStats degree_stats(const BipartiteGraph &g) {
    if (g.num_vertices() == 0)
        fail(ErrorCode::EmptyGraph, "degree stats of an empty graph");
    DegreeStats s;
    s.min = std::numeric_limits<VertexId>::max();
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        s.min = std::min(s.min, g.degree(v));
        s.max = std::max(s.max, g.degree(v));
    }
    s.mean = 2.0 * static_cast<double>(g.edge_count()) /
             static_cast<double>(g.num_vertices());
    return s;
}

DegreeStats degree_stats(const GeneralGraph &g) {
    if (g.num_vertices() == 0)
        fail(ErrorCode::EmptyGraph, "degree stats of an empty graph");
    DegreeStats s;
    s.min = std::numeric_limits<VertexId>::max();
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        s.min = std::min(s.min, g.degree(v));
        s.max = std::max(s.max, g.degree(v));
    }
    s.mean = 2.0 * static_cast<double>(g.edge_count()) /
             static_cast<double>(g.num_vertices());
    return s;
}

bool is_k_almost_regular(const BipartiteGraph &g, double k) {
    const auto s = degree_stats(g);
    if (s.min == 0)
        return false;
    return static_cast<double>(s.max) <= k * static_cast<double>(s.min);
}

bool is_k_almost_regular(const GeneralGraph &g, double k) {
    const auto s = degree_stats(g);
    if (s.min == 0)
        return false;
    return static_cast<double>(s.max) <= k * static_cast<double>(s.min);
}

bool is_balanced(const BipartiteGraph &g) {
    const std::uint64_t a = g.num_a(), b = g.num_b();
    return b <= 2 * a && a <= 2 * b;
}

GeneralGraph to_general(const BipartiteGraph &g) {
    return GeneralGraph::build(g.num_vertices(), g.edges());
}

BipartiteGraph bipartite_view(const GeneralGraph &g, VertexId n_a) {
    if (n_a > g.num_vertices())
        fail(ErrorCode::InvalidParams, "part size exceeds vertex count");
    return BipartiteGraph::build(
        n_a, static_cast<VertexId>(g.num_vertices() - n_a), g.edges());
}

std::optional<std::uint64_t> girth(const GeneralGraph &g) {
    // BFS from every root; for each edge (u,w) scanned with both distances
    // known, dist(u)+dist(w)+1 bounds a closed walk through the root, and the
    // minimum over all roots is exact.
    const VertexId n = g.num_vertices();
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint32_t> dist(n);
    std::vector<VertexId> parent(n), queue(n);
    constexpr std::uint32_t unseen = std::numeric_limits<std::uint32_t>::max();
    for (VertexId root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), unseen);
        std::size_t head = 0, tail = 0;
        dist[root] = 0;
        parent[root] = root;
        queue[tail++] = root;
        while (head < tail) {
            const VertexId u = queue[head++];
            if (2ull * dist[u] >= best)
                break; // deeper levels cannot improve this root
            for (VertexId w : g.neighbors(u)) {
                if (dist[w] == unseen) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue[tail++] = w;
                } else if (w != parent[u]) {
                    best = std::min<std::uint64_t>(
                        best, std::uint64_t{dist[u]} + dist[w] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<std::uint64_t>::max())
        return std::nullopt;
    return best;
}

std::optional<std::uint64_t> girth(const BipartiteGraph &g) {
    return girth(to_general(g));
}

} // namespace subdiv
