#ifndef SUBDIV_WEIGHTS_HPP
#define SUBDIV_WEIGHTS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "subdiv/graph.hpp"

namespace subdiv {

inline std::uint64_t choose2(std::uint64_t k) { return k * (k - 1) / 2; }

struct WeightEntry {
    VertexId v;
    std::uint32_t w;
};

// Codegree structure of a bipartite host, i.e. the weighted graph on part A
// whose pair weights are |N(u) ∩ N(v)|. Stored as a symmetric CSR over A
// with zero-weight pairs omitted; each row is sorted by neighbour id.
class NeighbourhoodWeights {
  public:
    static NeighbourhoodWeights
    from_rows(std::vector<std::vector<WeightEntry>> &&rows);

    VertexId num_a() const { return n_a_; }

    std::span<const WeightEntry> row(VertexId u) const {
        return {entries_.data() + ptr_[u], entries_.data() + ptr_[u + 1]};
    }

    // 0 when the pair has no common neighbour. InvalidPair on ids outside A
    // or u == v.
    std::uint32_t weight(VertexId u, VertexId v) const;

    std::uint64_t pair_count() const; // nonzero unordered pairs
    std::uint32_t max_weight() const;

  private:
    VertexId n_a_ = 0;
    std::vector<std::uint64_t> ptr_;
    std::vector<WeightEntry> entries_;
};

enum class EdgeClass { Absent, Light, Heavy };

// Pairs with weight in [1, C(s+t-1,2)) are light, heavier ones heavy.
std::uint64_t light_threshold(std::uint32_t s, std::uint32_t t);
EdgeClass classify_edge(const NeighbourhoodWeights &w, VertexId u, VertexId v,
                        std::uint32_t s, std::uint32_t t);

// |N(u) ∩ N(v)| straight off the adjacency lists (sorted intersection).
std::uint64_t codegree(const BipartiteGraph &g, VertexId u, VertexId v);

// W(U) = sum of pair weights inside U. InvalidSubset if U reaches outside A
// or repeats a vertex.
std::uint64_t total_weight(const NeighbourhoodWeights &w,
                           std::span<const VertexId> u_set);

namespace detail {
std::vector<std::uint8_t> subset_mask(VertexId n_a,
                                      std::span<const VertexId> u_set);
} // namespace detail

} // namespace subdiv

#endif
