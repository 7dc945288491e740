#include "subdiv/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <limits>
#include <string>
#include <unordered_map>

#include "subdiv/kernels.hpp"

namespace subdiv {

std::uint64_t default_budget() {
    if (const char *env = std::getenv("SUBDIVLAB_BUDGET")) {
        char *end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0)
            return v;
    }
    return 50'000'000ULL;
}

namespace {

// Static match order for backtracking: highest degree first, then greedily
// the vertex with the most already-ordered neighbours (ties: degree, id).
std::vector<VertexId> match_order(const GeneralGraph &h) {
    const VertexId n = h.num_vertices();
    std::vector<VertexId> order;
    std::vector<std::uint8_t> placed(n, 0);
    std::vector<std::uint32_t> anchored(n, 0);
    order.reserve(n);
    for (VertexId step = 0; step < n; ++step) {
        VertexId pick = n;
        for (VertexId v = 0; v < n; ++v) {
            if (placed[v])
                continue;
            if (pick == n || anchored[v] > anchored[pick] ||
                (anchored[v] == anchored[pick] &&
                 h.degree(v) > h.degree(pick)))
                pick = v;
        }
        placed[pick] = 1;
        order.push_back(pick);
        for (VertexId w : h.neighbors(pick))
            ++anchored[w];
    }
    return order;
}

struct SubgraphSearch {
    const GeneralGraph &g;
    const GeneralGraph &h;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exceeded = false;
    std::vector<VertexId> order;
    std::vector<std::vector<VertexId>> anchors; // ordered H-neighbours per step
    std::vector<VertexId> map;
    std::vector<std::uint8_t> used;

    SubgraphSearch(const GeneralGraph &g_, const GeneralGraph &h_,
                   std::uint64_t budget_)
        : g(g_), h(h_), budget(budget_), order(match_order(h_)),
          anchors(h_.num_vertices()), map(h_.num_vertices(), 0),
          used(g_.num_vertices(), 0) {
        std::vector<std::uint32_t> pos(h.num_vertices(), 0);
        for (std::uint32_t i = 0; i < order.size(); ++i)
            pos[order[i]] = i;
        for (std::uint32_t i = 0; i < order.size(); ++i)
            for (VertexId w : h.neighbors(order[i]))
                if (pos[w] < i)
                    anchors[i].push_back(w);
    }

    bool feasible(VertexId hv, VertexId gv, std::uint32_t step) const {
        if (used[gv] || g.degree(gv) < h.degree(hv))
            return false;
        for (VertexId a : anchors[step])
            if (!g.has_edge(gv, map[a]))
                return false;
        return true;
    }

    bool place(std::uint32_t step, VertexId gv) {
        const VertexId hv = order[step];
        map[hv] = gv;
        used[gv] = 1;
        const bool ok = dfs(step + 1);
        used[gv] = 0;
        return ok;
    }

    bool dfs(std::uint32_t step) {
        if (step == order.size())
            return true;
        const VertexId hv = order[step];
        if (anchors[step].empty()) {
            for (VertexId gv = 0; gv < g.num_vertices(); ++gv) {
                if (++nodes > budget) {
                    exceeded = true;
                    return false;
                }
                if (feasible(hv, gv, step) && place(step, gv))
                    return true;
                if (exceeded)
                    return false;
            }
            return false;
        }
        // Iterate over the neighbourhood of the mapped anchor whose image
        // has the fewest neighbours.
        VertexId best_anchor = anchors[step][0];
        for (VertexId a : anchors[step])
            if (g.degree(map[a]) < g.degree(map[best_anchor]))
                best_anchor = a;
        for (VertexId gv : g.neighbors(map[best_anchor])) {
            if (++nodes > budget) {
                exceeded = true;
                return false;
            }
            if (feasible(hv, gv, step) && place(step, gv))
                return true;
            if (exceeded)
                return false;
        }
        return false;
    }
};

} // namespace

SearchResult contains_subgraph(const GeneralGraph &g, const GeneralGraph &h,
                               std::uint64_t budget) {
    SearchResult res;
    if (h.num_vertices() > g.num_vertices()) {
        res.status = SearchStatus::No;
        return res;
    }
    if (h.num_vertices() == 0) {
        res.status = SearchStatus::Yes;
        res.witness.emplace();
        return res;
    }
    SubgraphSearch search(g, h, budget);
    const bool found = search.dfs(0);
    res.nodes = search.nodes;
    if (found) {
        res.status = SearchStatus::Yes;
        res.witness = search.map;
    } else {
        res.status = search.exceeded ? SearchStatus::BudgetExceeded
                                     : SearchStatus::No;
    }
    return res;
}

SearchResult contains_subdivision(const GeneralGraph &g, const Pattern &p,
                                  std::uint64_t budget) {
    return contains_subgraph(g, subdivide(p), budget);
}

SearchResult contains_subdivision(const GeneralGraph &g,
                                  const GeneralGraph &base,
                                  std::uint64_t budget) {
    return contains_subgraph(g, subdivide(base), budget);
}

namespace {

// Colour refinement: repeatedly split colour classes by the multiset of
// neighbour colours. Returns per-vertex colours; the number of rounds is at
// most n.
std::vector<std::uint32_t> refine_colors(const GeneralGraph &g) {
    const VertexId n = g.num_vertices();
    std::vector<std::uint32_t> color(n, 0);
    std::uint32_t classes = 1;
    for (VertexId round = 0; round < n; ++round) {
        std::vector<std::pair<std::vector<std::uint32_t>, VertexId>> sig(n);
        for (VertexId v = 0; v < n; ++v) {
            auto &key = sig[v].first;
            key.push_back(color[v]);
            for (VertexId w : g.neighbors(v))
                key.push_back(color[w]);
            std::sort(key.begin() + 1, key.end());
            sig[v].second = v;
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        std::uint32_t next = 0;
        std::vector<std::uint32_t> new_color(n, 0);
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            if (i > 0 && sorted[i].first != sorted[i - 1].first)
                ++next;
            new_color[sorted[i].second] = next;
        }
        if (next + 1 == classes) {
            color = new_color;
            break;
        }
        classes = next + 1;
        color = new_color;
    }
    return color;
}

} // namespace

bool graph_isomorphic(const GeneralGraph &a, const GeneralGraph &b) {
    const VertexId n = a.num_vertices();
    if (n != b.num_vertices() || a.edge_count() != b.edge_count())
        return false;
    if (n == 0)
        return true;

    const auto ca = refine_colors(a);
    const auto cb = refine_colors(b);
    auto hist = [n](const std::vector<std::uint32_t> &c) {
        std::vector<std::uint32_t> h(c);
        std::sort(h.begin(), h.end());
        return h;
    };
    if (hist(ca) != hist(cb))
        return false;

    // Match in colour-class order, rarest classes first.
    std::vector<VertexId> order(n);
    for (VertexId v = 0; v < n; ++v)
        order[v] = v;
    std::vector<std::uint32_t> class_size(n, 0);
    for (auto c : ca)
        ++class_size[c];
    std::sort(order.begin(), order.end(), [&](VertexId x, VertexId y) {
        if (class_size[ca[x]] != class_size[ca[y]])
            return class_size[ca[x]] < class_size[ca[y]];
        if (ca[x] != ca[y])
            return ca[x] < ca[y];
        return x < y;
    });

    std::vector<VertexId> map(n, 0);
    std::vector<std::uint8_t> used(n, 0);
    auto dfs = [&](auto &&self, VertexId step) -> bool {
        if (step == n)
            return true;
        const VertexId av = order[step];
        for (VertexId bv = 0; bv < n; ++bv) {
            if (used[bv] || cb[bv] != ca[av] || b.degree(bv) != a.degree(av))
                continue;
            bool ok = true;
            for (VertexId prev = 0; prev < step && ok; ++prev) {
                const VertexId ap = order[prev];
                if (a.has_edge(av, ap) != b.has_edge(bv, map[ap]))
                    ok = false;
            }
            if (!ok)
                continue;
            map[av] = bv;
            used[bv] = 1;
            if (self(self, step + 1))
                return true;
            used[bv] = 0;
        }
        return false;
    };
    return dfs(dfs, 0);
}

bool bipartite_girth_at_least_8(const BipartiteGraph &g) {
    if (g.edge_count() == 0)
        return true;
    if (max_codegree(g) > 1)
        return false; // some pair of B-vertices closes a C4

    // With all codegrees <= 1, a C6 exists iff some B-vertex b has two
    // neighbours a != a' that reach a common third point through lines other
    // than b. Stamp every such reachable point with its anchor; a restamp
    // from a different anchor within the same b is exactly a C6.
    const VertexId n_a = g.num_a();
    std::vector<std::uint32_t> epoch(n_a, 0);
    std::vector<VertexId> anchor(n_a, 0);
    std::uint32_t cur = 0;
    for (VertexId b = g.num_a(); b < g.num_vertices(); ++b) {
        ++cur;
        for (VertexId a : g.neighbors(b)) {
            for (VertexId line : g.neighbors(a)) {
                if (line == b)
                    continue;
                for (VertexId x : g.neighbors(line)) {
                    if (x == a)
                        continue;
                    if (epoch[x] == cur && anchor[x] != a)
                        return false;
                    epoch[x] = cur;
                    anchor[x] = a;
                }
            }
        }
    }
    return true;
}

namespace {

// Dense little graphs for the extremal searches: adjacency rows as bitmasks.
constexpr std::uint32_t kMaxExtremal = 14;

struct BitGraph {
    std::uint32_t n = 0;
    std::array<std::uint16_t, kMaxExtremal + 2> adj{};

    bool edge(std::uint32_t u, std::uint32_t v) const {
        return (adj[u] >> v) & 1u;
    }
    void add(std::uint32_t u, std::uint32_t v) {
        adj[u] |= std::uint16_t(1u << v);
        adj[v] |= std::uint16_t(1u << u);
    }
    void remove(std::uint32_t u, std::uint32_t v) {
        adj[u] &= std::uint16_t(~(1u << v));
        adj[v] &= std::uint16_t(~(1u << u));
    }
    std::uint32_t degree(std::uint32_t v) const {
        return std::popcount(adj[v]);
    }
    std::uint32_t edge_total() const {
        std::uint32_t s = 0;
        for (std::uint32_t v = 0; v < n; ++v)
            s += degree(v);
        return s / 2;
    }
};

struct PatternBits {
    std::uint32_t n = 0;
    std::vector<Edge> edges;
    std::array<std::uint16_t, kMaxExtremal + 2> adj{};
    std::vector<std::uint32_t> deg;
};

PatternBits pattern_bits(const GeneralGraph &h) {
    PatternBits p;
    p.n = h.num_vertices();
    p.edges = h.edges();
    p.deg.resize(p.n);
    for (VertexId v = 0; v < p.n; ++v)
        p.deg[v] = h.degree(v);
    for (const auto &[u, v] : p.edges) {
        p.adj[u] |= std::uint16_t(1u << v);
        p.adj[v] |= std::uint16_t(1u << u);
    }
    return p;
}

// Complete a partial injection H -> G. assigned/gmap describe preplaced
// vertices. Picks the unassigned H-vertex with the most assigned neighbours
// at every step and tests candidates with bitmask adjacency.
struct BitMatcher {
    const BitGraph &g;
    const PatternBits &h;
    std::uint64_t nodes = 0;

    bool extend(std::uint32_t assigned_mask, std::uint32_t used_mask,
                std::array<std::uint8_t, kMaxExtremal + 2> &gmap) {
        if (assigned_mask + 1 == (1u << h.n))
            return true;
        std::uint32_t pick = h.n, pick_count = 0;
        for (std::uint32_t hv = 0; hv < h.n; ++hv) {
            if ((assigned_mask >> hv) & 1u)
                continue;
            const std::uint32_t c =
                std::popcount(std::uint32_t(h.adj[hv]) & assigned_mask);
            if (pick == h.n || c > pick_count) {
                pick = hv;
                pick_count = c;
            }
        }
        std::uint32_t need = 0;
        std::uint32_t nb = std::uint32_t(h.adj[pick]) & assigned_mask;
        while (nb) {
            const std::uint32_t hv = std::uint32_t(std::countr_zero(nb));
            nb &= nb - 1;
            need |= 1u << gmap[hv];
        }
        for (std::uint32_t gv = 0; gv < g.n; ++gv) {
            if ((used_mask >> gv) & 1u)
                continue;
            ++nodes;
            if (g.degree(gv) < h.deg[pick])
                continue;
            if ((std::uint32_t(g.adj[gv]) & need) != need)
                continue;
            gmap[pick] = static_cast<std::uint8_t>(gv);
            if (extend(assigned_mask | (1u << pick), used_mask | (1u << gv),
                       gmap))
                return true;
        }
        return false;
    }
};

// Does g + the edge (u,v) contain a copy of h that uses that edge? The edge
// is pending, not present in g, so u and v each carry one phantom degree.
bool creates_copy(const BitGraph &g, const PatternBits &h, std::uint32_t u,
                  std::uint32_t v, std::uint64_t &nodes) {
    std::array<std::uint8_t, kMaxExtremal + 2> gmap{};
    for (const auto &[hx, hy] : h.edges) {
        for (int flip = 0; flip < 2; ++flip) {
            const std::uint32_t a = flip ? hy : hx;
            const std::uint32_t b = flip ? hx : hy;
            if (g.degree(u) + 1 < h.deg[a] || g.degree(v) + 1 < h.deg[b])
                continue;
            gmap[a] = static_cast<std::uint8_t>(u);
            gmap[b] = static_cast<std::uint8_t>(v);
            BitMatcher m{g, h, 0};
            const bool hit = m.extend((1u << a) | (1u << b),
                                      (1u << u) | (1u << v), gmap);
            nodes += m.nodes;
            if (hit)
                return true;
        }
    }
    return false;
}

// Does g contain a copy of h through vertex v (as any pattern vertex)?
bool copy_through_vertex(const BitGraph &g, const PatternBits &h,
                         std::uint32_t v, std::uint64_t &nodes) {
    std::array<std::uint8_t, kMaxExtremal + 2> gmap{};
    for (std::uint32_t hv = 0; hv < h.n; ++hv) {
        if (g.degree(v) < h.deg[hv])
            continue;
        gmap[hv] = static_cast<std::uint8_t>(v);
        BitMatcher m{g, h, 0};
        const bool hit = m.extend(1u << hv, 1u << v, gmap);
        nodes += m.nodes;
        if (hit)
            return true;
    }
    return false;
}

GeneralGraph to_general_graph(const BitGraph &g) {
    std::vector<Edge> edges;
    for (std::uint32_t u = 0; u < g.n; ++u)
        for (std::uint32_t v = u + 1; v < g.n; ++v)
            if (g.edge(u, v))
                edges.emplace_back(u, v);
    return GeneralGraph::build(g.n, edges);
}

// Lexicographic greedy maximal h-free graph; seeds the best-so-far bound.
BitGraph greedy_floor(std::uint32_t n, const PatternBits &h,
                      std::uint64_t &nodes) {
    BitGraph g;
    g.n = n;
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v)
            if (!creates_copy(g, h, u, v, nodes))
                g.add(u, v);
    return g;
}

struct ExhaustiveState {
    PatternBits h;
    std::vector<Edge> slots;
    BitGraph cur;
    std::uint32_t cur_edges = 0;
    std::uint32_t best = 0;
    BitGraph best_graph;
    std::uint64_t nodes = 0;

    void dfs(std::size_t pos) {
        ++nodes;
        const std::uint32_t remaining =
            static_cast<std::uint32_t>(slots.size() - pos);
        if (cur_edges + remaining <= best)
            return;
        if (pos == slots.size()) {
            best = cur_edges;
            best_graph = cur;
            return;
        }
        const auto [u, v] = slots[pos];
        if (!creates_copy(cur, h, u, v, nodes)) {
            cur.add(u, v);
            ++cur_edges;
            dfs(pos + 1);
            --cur_edges;
            cur.remove(u, v);
        }
        dfs(pos + 1);
    }
};

// Isomorph rejection store: bucket by a cheap degree/neighbour-degree
// invariant, exact isomorphism test inside the bucket.
struct RepStore {
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets;
    std::vector<BitGraph> reps;

    static std::uint64_t invariant(const BitGraph &g) {
        std::array<std::uint64_t, kMaxExtremal + 2> sig{};
        for (std::uint32_t v = 0; v < g.n; ++v) {
            std::uint64_t s = g.degree(v);
            std::uint32_t nb = g.adj[v];
            std::array<std::uint32_t, kMaxExtremal + 2> nd{};
            std::uint32_t cnt = 0;
            while (nb) {
                nd[cnt++] = g.degree(std::uint32_t(std::countr_zero(nb)));
                nb &= nb - 1;
            }
            std::sort(nd.begin(), nd.begin() + cnt);
            for (std::uint32_t i = 0; i < cnt; ++i)
                s = s * 1000003ULL + nd[i] + 1;
            sig[v] = s;
        }
        std::sort(sig.begin(), sig.begin() + g.n);
        std::uint64_t key = g.n * 2654435761ULL + g.edge_total();
        for (std::uint32_t v = 0; v < g.n; ++v)
            key = key * 0x9e3779b97f4a7c15ULL + sig[v];
        return key;
    }

    static bool bit_iso(const BitGraph &a, const BitGraph &b) {
        if (a.n != b.n || a.edge_total() != b.edge_total())
            return false;
        const std::uint32_t n = a.n;
        std::array<std::uint8_t, kMaxExtremal + 2> map{};
        std::uint32_t used = 0;
        std::array<std::uint8_t, kMaxExtremal + 2> order{};
        for (std::uint32_t v = 0; v < n; ++v)
            order[v] = static_cast<std::uint8_t>(v);
        std::sort(order.begin(), order.begin() + n,
                  [&](std::uint8_t x, std::uint8_t y) {
                      if (a.degree(x) != a.degree(y))
                          return a.degree(x) > a.degree(y);
                      return x < y;
                  });
        auto rec = [&](auto &&self, std::uint32_t step) -> bool {
            if (step == n)
                return true;
            const std::uint32_t av = order[step];
            for (std::uint32_t bv = 0; bv < n; ++bv) {
                if ((used >> bv) & 1u)
                    continue;
                if (b.degree(bv) != a.degree(av))
                    continue;
                bool ok = true;
                for (std::uint32_t prev = 0; prev < step && ok; ++prev) {
                    const std::uint32_t ap = order[prev];
                    if (a.edge(av, ap) != b.edge(bv, map[ap]))
                        ok = false;
                }
                if (!ok)
                    continue;
                map[av] = static_cast<std::uint8_t>(bv);
                used |= 1u << bv;
                if (self(self, step + 1))
                    return true;
                used &= ~(1u << bv);
            }
            return false;
        };
        return rec(rec, 0);
    }

    // True if g was new and got stored.
    bool insert(const BitGraph &g) {
        const std::uint64_t key = invariant(g);
        auto &bucket = buckets[key];
        for (std::uint32_t idx : bucket)
            if (bit_iso(reps[idx], g))
                return false;
        bucket.push_back(static_cast<std::uint32_t>(reps.size()));
        reps.push_back(g);
        return true;
    }
};

} // namespace

ExtremalRecord extremal_number(std::uint32_t n, const GeneralGraph &h,
                               ExtremalMode mode) {
    if (n == 0)
        fail(ErrorCode::InvalidParams, "extremal number needs n >= 1");
    if (h.edge_count() == 0)
        fail(ErrorCode::InvalidParams,
             "forbidden graph must have at least one edge");
    const std::uint32_t cap =
        mode == ExtremalMode::Exhaustive ? 10u : kMaxExtremal;
    if (n > cap)
        fail(ErrorCode::TooLarge, "n > " + std::to_string(cap) +
                                      " for this search mode");
    if (h.num_vertices() > kMaxExtremal + 2)
        fail(ErrorCode::TooLarge, "forbidden graph too large");

    const PatternBits hb = pattern_bits(h);
    ExtremalRecord rec;
    rec.n = n;

    BitGraph best_graph;
    std::uint32_t best = 0;
    std::uint64_t nodes = 0;

    if (mode == ExtremalMode::Exhaustive) {
        ExhaustiveState st;
        st.h = hb;
        st.cur.n = n;
        st.best_graph.n = n;
        for (std::uint32_t u = 0; u < n; ++u)
            for (std::uint32_t v = u + 1; v < n; ++v)
                st.slots.emplace_back(u, v);
        st.dfs(0);
        best = st.best;
        best_graph = st.best_graph;
        nodes = st.nodes;
    } else {
        const BitGraph floor_graph = greedy_floor(n, hb, nodes);
        best = floor_graph.edge_total();
        best_graph = floor_graph;

        // future_slots[k]: edges still placeable when k vertices are fixed.
        std::vector<std::uint32_t> future(n + 1, 0);
        for (std::uint32_t k = n; k-- > 0;)
            future[k] = future[k + 1] + k;

        std::vector<BitGraph> reps;
        BitGraph seed;
        seed.n = 1;
        reps.push_back(seed);
        for (std::uint32_t k = 1; k < n; ++k) {
            const bool final_level = (k + 1 == n);
            RepStore next;
            for (const BitGraph &p : reps) {
                const std::uint32_t p_edges = p.edge_total();
                for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
                    ++nodes;
                    const std::uint32_t e2 =
                        p_edges + std::uint32_t(std::popcount(mask));
                    if (final_level) {
                        if (e2 <= best)
                            continue;
                    } else if (e2 + future[k + 1] <= best) {
                        continue;
                    }
                    BitGraph q = p;
                    q.n = k + 1;
                    std::uint32_t bits = mask;
                    while (bits) {
                        const std::uint32_t v =
                            std::uint32_t(std::countr_zero(bits));
                        bits &= bits - 1;
                        q.add(v, k);
                    }
                    if (copy_through_vertex(q, hb, k, nodes))
                        continue;
                    if (final_level) {
                        best = e2;
                        best_graph = q;
                    } else {
                        next.insert(q);
                    }
                }
            }
            if (!final_level)
                reps = std::move(next.reps);
        }
    }

    rec.value = best;
    rec.witness = to_general_graph(best_graph);
    rec.nodes = nodes;
    const auto verify = contains_subgraph(rec.witness, h);
    rec.witness_verified = verify.status == SearchStatus::No &&
                           rec.witness.edge_count() == rec.value;
    return rec;
}

ExtremalRecord extremal_number(std::uint32_t n, const Pattern &p,
                               ExtremalMode mode) {
    return extremal_number(n, subdivide(p), mode);
}

namespace {

double min_a_degree(const BipartiteGraph &g) {
    double d = std::numeric_limits<double>::infinity();
    for (VertexId a = 0; a < g.num_a(); ++a)
        d = std::min(d, static_cast<double>(g.degree(a)));
    return d;
}

void require_pattern_params(std::uint32_t s, std::uint32_t t) {
    if (s < 1 || t < 3)
        fail(ErrorCode::InvalidParams, "need s >= 1 and t >= 3");
}

} // namespace

LemmaCheck check_locallydense(const BipartiteGraph &g,
                              std::span<const VertexId> u_set, double delta) {
    if (delta <= 0)
        fail(ErrorCode::InvalidParams, "delta must be positive");
    const double n = static_cast<double>(g.num_b());
    if (min_a_degree(g) < delta)
        fail(ErrorCode::PreconditionFailed,
             "some A-vertex has degree below delta");
    if (delta * static_cast<double>(u_set.size()) < 2.0 * n)
        fail(ErrorCode::PreconditionFailed, "delta * |U| < 2n");
    LemmaCheck c;
    c.lhs = static_cast<double>(total_weight_in(g, u_set));
    c.rhs = delta * delta / (2.0 * n) *
            static_cast<double>(choose2(u_set.size()));
    c.holds = c.lhs >= c.rhs;
    return c;
}

LemmaCheck check_manylight(const BipartiteGraph &g, std::uint32_t s,
                           std::uint32_t t) {
    require_pattern_params(s, t);
    const double n = static_cast<double>(g.num_b());
    const double wa = static_cast<double>(wedge_count(g));
    const double st = static_cast<double>(s) + static_cast<double>(t);
    if (wa < 8.0 * st * st * n)
        fail(ErrorCode::PreconditionFailed, "W(A) < 8(s+t)^2 n");
    std::vector<VertexId> all_a(g.num_a());
    for (VertexId a = 0; a < g.num_a(); ++a)
        all_a[a] = a;
    LemmaCheck c;
    c.lhs = static_cast<double>(
        light_edges_in(g, all_a, light_threshold(s, t)));
    c.rhs = wa / (4.0 * st * st * st);
    c.holds = c.lhs >= c.rhs;
    return c;
}

TuranCheck check_turan_step(const BipartiteGraph &g, VertexId b,
                            std::uint32_t s, std::uint32_t t) {
    require_pattern_params(s, t);
    if (!g.in_b(b))
        fail(ErrorCode::InvalidParams,
             "vertex " + std::to_string(b) + " is not in part B");
    const double k = static_cast<double>(g.degree(b));
    const double parts = static_cast<double>(s) + t - 2.0;
    if (k < 2.0 * parts)
        fail(ErrorCode::PreconditionFailed, "deg(b) < 2(s+t-2)");
    TuranCheck c;
    c.light = light_edges_in(g, g.neighbors(b), light_threshold(s, t));
    c.bound_weak = k * k / (4.0 * parts);
    const double x = k / parts;
    c.bound_strong = parts * x * (x - 1.0) / 2.0;
    c.holds = static_cast<double>(c.light) >= c.bound_weak &&
              static_cast<double>(c.light) >= c.bound_strong;
    return c;
}

LemmaCheck check_lightcorollary(const BipartiteGraph &g,
                                std::span<const VertexId> u_set,
                                std::uint32_t s, std::uint32_t t, double delta,
                                std::uint32_t max_codeg_hint) {
    require_pattern_params(s, t);
    if (delta <= 0)
        fail(ErrorCode::InvalidParams, "delta must be positive");
    const double n = static_cast<double>(g.num_b());
    if (min_a_degree(g) < delta)
        fail(ErrorCode::PreconditionFailed,
             "some A-vertex has degree below delta");
    if (u_set.size() < 2)
        fail(ErrorCode::PreconditionFailed, "|U| < 2");
    const double st = static_cast<double>(s) + static_cast<double>(t);
    if (static_cast<double>(u_set.size()) < 8.0 * st * n / delta)
        fail(ErrorCode::PreconditionFailed, "|U| < 8(s+t)n/delta");
    LemmaCheck c;
    c.lhs = static_cast<double>(
        light_edges_in(g, u_set, light_threshold(s, t), max_codeg_hint));
    c.rhs = delta * delta / (8.0 * st * st * st * n) *
            static_cast<double>(choose2(u_set.size()));
    c.holds = c.lhs >= c.rhs;
    return c;
}

} // namespace subdiv
