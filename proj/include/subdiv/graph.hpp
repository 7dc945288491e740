#ifndef SUBDIV_GRAPH_HPP
#define SUBDIV_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "subdiv/error.hpp"

namespace subdiv {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

// Bipartite host graph. Vertex ids are dense: part A occupies [0, num_a()),
// part B occupies [num_a(), num_a()+num_b()). Adjacency is CSR with each
// neighbour list sorted, so has_edge is a binary search and neighbour scans
// are cache friendly. Instances are immutable once built.
class BipartiteGraph {
  public:
    // Default state is the valid empty graph; build() makes everything else.
    BipartiteGraph() = default;

    static BipartiteGraph build(VertexId n_a, VertexId n_b,
                                std::span<const Edge> edges);

    VertexId num_a() const { return n_a_; }
    VertexId num_b() const { return n_b_; }
    VertexId num_vertices() const { return n_a_ + n_b_; }
    std::uint64_t edge_count() const { return m_; }

    bool in_a(VertexId v) const { return v < n_a_; }
    bool in_b(VertexId v) const { return v >= n_a_ && v < num_vertices(); }

    VertexId degree(VertexId v) const {
        return static_cast<VertexId>(ptr_[v + 1] - ptr_[v]);
    }

    std::span<const VertexId> neighbors(VertexId v) const {
        return {adj_.data() + ptr_[v], adj_.data() + ptr_[v + 1]};
    }

    bool has_edge(VertexId u, VertexId v) const;

    // Edges as (a, b) pairs with a < num_a() <= b, in sorted order.
    std::vector<Edge> edges() const;

  private:
    VertexId n_a_ = 0;
    VertexId n_b_ = 0;
    std::uint64_t m_ = 0;
    std::vector<std::uint64_t> ptr_ = {0};
    std::vector<VertexId> adj_;
};

// Simple undirected graph on dense ids [0, n). Same storage scheme.
class GeneralGraph {
  public:
    GeneralGraph() = default;

    static GeneralGraph build(VertexId n, std::span<const Edge> edges);

    VertexId num_vertices() const { return n_; }
    std::uint64_t edge_count() const { return m_; }

    VertexId degree(VertexId v) const {
        return static_cast<VertexId>(ptr_[v + 1] - ptr_[v]);
    }

    std::span<const VertexId> neighbors(VertexId v) const {
        return {adj_.data() + ptr_[v], adj_.data() + ptr_[v + 1]};
    }

    bool has_edge(VertexId u, VertexId v) const;

    std::vector<Edge> edges() const; // (u, v) with u < v, sorted

  private:
    VertexId n_ = 0;
    std::uint64_t m_ = 0;
    std::vector<std::uint64_t> ptr_ = {0};
    std::vector<VertexId> adj_;
};

struct DegreeStats {
    VertexId min = 0;
    VertexId max = 0;
    double mean = 0.0;
};

DegreeStats degree_stats(const BipartiteGraph &g); // EmptyGraph if no vertices
DegreeStats degree_stats(const GeneralGraph &g);

// max degree <= K * min degree; false when the minimum degree is zero.
bool is_k_almost_regular(const BipartiteGraph &g, double k);
bool is_k_almost_regular(const GeneralGraph &g, double k);

// |B|/2 <= |A| <= 2|B|.
bool is_balanced(const BipartiteGraph &g);

// Forget the bipartition (ids unchanged).
GeneralGraph to_general(const BipartiteGraph &g);

// Reinterpret vertices [0, n_a) as part A and the rest as part B.
// InvalidEdge if any edge lives inside one part.
BipartiteGraph bipartite_view(const GeneralGraph &g, VertexId n_a);

// Length of a shortest cycle; nullopt for forests. BFS from every vertex.
std::optional<std::uint64_t> girth(const GeneralGraph &g);
std::optional<std::uint64_t> girth(const BipartiteGraph &g);

} // namespace subdiv

#endif
