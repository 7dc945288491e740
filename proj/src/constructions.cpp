#include "subdiv/constructions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "subdiv/oracle.hpp"
#include "subdiv/pattern.hpp"
#include "subdiv/rng.hpp"

namespace subdiv {

BipartiteGraph random_bipartite(VertexId n_a, VertexId n_b, double p,
                                std::uint64_t seed) {
    if (n_a == 0 || n_b == 0)
        fail(ErrorCode::InvalidParams, "both parts must be nonempty");
    if (!(p >= 0.0 && p <= 1.0))
        fail(ErrorCode::InvalidParams, "p must lie in [0,1]");
    Rng rng(seed);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(
        p * static_cast<double>(n_a) * static_cast<double>(n_b) * 1.05));
    for (VertexId a = 0; a < n_a; ++a)
        for (VertexId b = 0; b < n_b; ++b)
            if (rng.bernoulli(p))
                edges.emplace_back(a, n_a + b);
    return BipartiteGraph::build(n_a, n_b, edges);
}

double deletion_exponent(std::uint32_t t) {
    if (t < 3)
        fail(ErrorCode::InvalidParams, "need t >= 3");
    const double td = t;
    return 1.5 - (td - 1.5) / (td * td - td - 1.0);
}

namespace {

// All 6-cycles of g, each listed once, as edge lists. Cycles are rooted at
// their smallest vertex and traversed in the direction that makes the
// second vertex smaller than the last.
std::vector<std::array<Edge, 6>> list_six_cycles(const GeneralGraph &g) {
    std::vector<std::array<Edge, 6>> cycles;
    std::array<VertexId, 6> path{};
    std::vector<std::uint8_t> on_path(g.num_vertices(), 0);

    auto dfs = [&](auto &&self, VertexId root, std::uint32_t depth) -> void {
        const VertexId cur = path[depth - 1];
        if (depth == 6) {
            if (path[1] < path[5] && g.has_edge(cur, root)) {
                std::array<Edge, 6> edges;
                for (std::uint32_t i = 0; i < 6; ++i) {
                    VertexId u = path[i], v = path[(i + 1) % 6];
                    if (u > v)
                        std::swap(u, v);
                    edges[i] = {u, v};
                }
                std::sort(edges.begin(), edges.end());
                cycles.push_back(edges);
            }
            return;
        }
        for (VertexId w : g.neighbors(cur)) {
            if (w <= root || on_path[w])
                continue;
            path[depth] = w;
            on_path[w] = 1;
            self(self, root, depth + 1);
            on_path[w] = 0;
        }
    };

    for (VertexId root = 0; root < g.num_vertices(); ++root) {
        path[0] = root;
        on_path[root] = 1;
        dfs(dfs, root, 1);
        on_path[root] = 0;
    }
    return cycles;
}

std::vector<Edge> sample_gnp(std::uint32_t n, double p, Rng &rng) {
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (rng.bernoulli(p))
                edges.emplace_back(u, v);
    return edges;
}

} // namespace

std::pair<GeneralGraph, DeletionReport>
deletion_lower_bound(std::uint32_t n, std::uint32_t t, std::uint64_t seed,
                     double factor) {
    if (n < 1)
        fail(ErrorCode::InvalidParams, "need n >= 1");
    if (t < 3)
        fail(ErrorCode::InvalidParams, "need t >= 3");
    if (!(factor > 0.0))
        fail(ErrorCode::InvalidParams, "density factor must be positive");

    DeletionReport rep;
    rep.n = n;
    rep.t = t;
    rep.factor = factor;
    rep.target_exponent = deletion_exponent(t);
    const double x = (static_cast<double>(t) - 1.5) /
                     (static_cast<double>(t) * t - t - 1.0);
    rep.p = std::min(1.0, factor * std::pow(n, -x - 0.5));

    Rng rng(seed);
    std::vector<Edge> edges = sample_gnp(n, rep.p, rng);
    rep.initial_edges = edges.size();

    const Pattern forbidden = make_pattern(1, t); // L_{1,t} is K_t
    GeneralGraph g = GeneralGraph::build(n, edges);

    if (t == 3) {
        // The subdivision of K_3 is C_6; list all 6-cycles of the sample
        // and delete the smallest still-alive edge of each. Every listed
        // cycle loses an edge and deletion creates no cycles, so the
        // survivor is C_6-free outright.
        const auto cycles = list_six_cycles(g);
        std::vector<Edge> alive = edges;
        std::sort(alive.begin(), alive.end());
        auto is_alive = [&](const Edge &e) {
            return std::binary_search(alive.begin(), alive.end(), e);
        };
        for (const auto &cyc : cycles) {
            bool intact = true;
            for (const Edge &e : cyc)
                if (!is_alive(e)) {
                    intact = false;
                    break;
                }
            if (!intact)
                continue;
            alive.erase(
                std::lower_bound(alive.begin(), alive.end(), cyc.front()));
            ++rep.edges_deleted;
        }
        g = GeneralGraph::build(n, alive);
    } else {
        // Search-delete-repeat under the node budget. Each round removes
        // the smallest edge of the found copy's image.
        for (;;) {
            const SearchResult res = contains_subdivision(g, forbidden);
            if (res.status == SearchStatus::No)
                break;
            if (res.status == SearchStatus::BudgetExceeded)
                fail(ErrorCode::TooLarge,
                     "containment search budget exhausted before the "
                     "sample was made subdivision-free");
            const GeneralGraph sub = subdivide(forbidden);
            const auto &map = *res.witness;
            Edge victim{0, 0};
            bool first = true;
            for (const auto &[hu, hv] : sub.edges()) {
                VertexId u = map[hu], v = map[hv];
                if (u > v)
                    std::swap(u, v);
                if (first || Edge{u, v} < victim) {
                    victim = {u, v};
                    first = false;
                }
            }
            std::vector<Edge> next = g.edges();
            next.erase(std::find(next.begin(), next.end(), victim));
            g = GeneralGraph::build(n, next);
            ++rep.edges_deleted;
        }
    }

    rep.final_edges = g.edge_count();
    rep.reference = std::pow(n, rep.target_exponent);
    rep.ratio = static_cast<double>(rep.final_edges) / rep.reference;
    rep.exact = true;
    rep.oracle_verified =
        contains_subdivision(g, forbidden).status == SearchStatus::No;
    return {std::move(g), rep};
}

namespace {

bool is_prime(std::uint32_t q) {
    if (q < 2)
        return false;
    for (std::uint32_t d = 2; d * d <= q; ++d)
        if (q % d == 0)
            return false;
    return true;
}

// Canonical id of a projective point, first nonzero coordinate scaled to 1.
// Layout: (1,x,y,z) then (0,1,y,z) then (0,0,1,z) then (0,0,0,1).
struct PointIndexer {
    std::uint64_t q;

    VertexId operator()(std::array<std::uint64_t, 4> v) const {
        std::uint32_t lead = 0;
        while (lead < 4 && v[lead] % q == 0)
            ++lead;
        // inverse of the leading coordinate via Fermat
        std::uint64_t inv = 1, base = v[lead] % q, e = q - 2;
        while (e) {
            if (e & 1)
                inv = inv * base % q;
            base = base * base % q;
            e >>= 1;
        }
        for (auto &c : v)
            c = c % q * inv % q;
        switch (lead) {
        case 0:
            return static_cast<VertexId>((v[1] * q + v[2]) * q + v[3]);
        case 1:
            return static_cast<VertexId>(q * q * q + v[2] * q + v[3]);
        case 2:
            return static_cast<VertexId>(q * q * q + q * q + v[3]);
        default:
            return static_cast<VertexId>(q * q * q + q * q + q);
        }
    }
};

} // namespace

BipartiteGraph gq_incidence(std::uint32_t q) {
    if (!is_prime(q))
        fail(ErrorCode::InvalidParameter,
             std::to_string(q) + " is not prime");
    if (q > 47)
        fail(ErrorCode::TooLarge, "q > 47 exceeds the intended host sizes");

    const std::uint64_t Q = q;
    const VertexId n_points =
        static_cast<VertexId>(((Q * Q + 1) * (Q + 1)));
    const PointIndexer point_id{Q};

    // antidiagonal alternating form; the +Q padding keeps the subtraction
    // nonnegative in unsigned arithmetic
    auto isotropic = [Q](const std::array<std::uint64_t, 4> &a,
                         const std::array<std::uint64_t, 4> &b) {
        const std::uint64_t pos = (a[0] * b[3] + a[1] * b[2]) % Q;
        const std::uint64_t neg = (a[3] * b[0] + a[2] * b[1]) % Q;
        return (pos + Q - neg) % Q == 0;
    };

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n_points) * (q + 1));
    VertexId line_count = 0;

    auto emit_line = [&](const std::array<std::uint64_t, 4> &r1,
                         const std::array<std::uint64_t, 4> &r2) {
        if (!isotropic(r1, r2))
            return;
        const VertexId line_vertex = n_points + line_count;
        edges.emplace_back(point_id(r1), line_vertex);
        for (std::uint64_t lam = 0; lam < Q; ++lam) {
            std::array<std::uint64_t, 4> pt;
            for (int i = 0; i < 4; ++i)
                pt[i] = (r2[i] + lam * r1[i]) % Q;
            edges.emplace_back(point_id(pt), line_vertex);
        }
        ++line_count;
    };

    // Row space representatives: reduced row echelon 2x4 matrices, one per
    // projective line, grouped by pivot columns.
    for (std::uint64_t a = 0; a < Q; ++a)
        for (std::uint64_t b = 0; b < Q; ++b)
            for (std::uint64_t c = 0; c < Q; ++c)
                for (std::uint64_t d = 0; d < Q; ++d)
                    emit_line({1, 0, a, b}, {0, 1, c, d}); // pivots 0,1
    for (std::uint64_t a = 0; a < Q; ++a)
        for (std::uint64_t b = 0; b < Q; ++b)
            for (std::uint64_t c = 0; c < Q; ++c)
                emit_line({1, a, 0, b}, {0, 0, 1, c}); // pivots 0,2
    for (std::uint64_t a = 0; a < Q; ++a)
        for (std::uint64_t b = 0; b < Q; ++b) {
            emit_line({1, a, b, 0}, {0, 0, 0, 1}); // pivots 0,3
            emit_line({0, 1, 0, a}, {0, 0, 1, b}); // pivots 1,2
        }
    for (std::uint64_t a = 0; a < Q; ++a)
        emit_line({0, 1, a, 0}, {0, 0, 0, 1}); // pivots 1,3
    emit_line({0, 0, 1, 0}, {0, 0, 0, 1});     // pivots 2,3

    if (line_count != n_points)
        throw std::logic_error("isotropic line count mismatch");
    return BipartiteGraph::build(n_points, n_points, edges);
}

} // namespace subdiv
