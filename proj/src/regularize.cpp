#include "subdiv/regularize.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "subdiv/rng.hpp"

namespace subdiv {

double RegularizeParams::effective_k_target() const {
    if (k_target > 0.0)
        return k_target;
    return 60.0 * std::pow(2.0, 1.0 + 1.0 / (alpha * alpha));
}

namespace {

void validate(const RegularizeParams &p) {
    if (!(p.alpha > 0.0 && p.alpha < 1.0))
        fail(ErrorCode::InvalidParams, "alpha must lie in (0,1)");
    if (!(p.c_density >= 1.0))
        fail(ErrorCode::InvalidParams, "density constant must be >= 1");
    if (p.k_target < 0.0)
        fail(ErrorCode::InvalidParams, "negative degree-ratio target");
}

// Working state across rounds: vertex sets of both sides (original ids)
// plus the surviving cross edges (a-side first in each pair).
struct Working {
    std::vector<VertexId> side_a;
    std::vector<VertexId> side_b;
    std::vector<Edge> edges;
};

std::uint32_t dyadic_bucket(std::uint32_t deg) {
    std::uint32_t i = 0;
    while ((2u << i) <= deg)
        ++i;
    return i; // deg in [2^i, 2^(i+1))
}

// Locally maximal balanced cut: seeded shuffle for the initial halves, then
// sweeps moving any vertex whose cut degree improves, while both sides stay
// within a factor 2. Each move raises the cut, so this terminates.
Working initial_split(const GeneralGraph &g, std::uint64_t seed) {
    const VertexId n = g.num_vertices();
    std::vector<VertexId> perm(n);
    for (VertexId v = 0; v < n; ++v)
        perm[v] = v;
    Rng rng(seed);
    rng.shuffle(perm);

    std::vector<std::uint8_t> in_a(n, 0);
    std::uint64_t size_a = 0, size_b = 0;
    for (VertexId i = 0; i < n; ++i) {
        if (i < (n + 1) / 2) {
            in_a[perm[i]] = 1;
            ++size_a;
        } else {
            ++size_b;
        }
    }

    for (bool moved = true; moved;) {
        moved = false;
        for (VertexId v = 0; v < n; ++v) {
            std::uint64_t same = 0, cross = 0;
            for (VertexId w : g.neighbors(v))
                (in_a[w] == in_a[v] ? same : cross) += 1;
            if (same <= cross)
                continue;
            // moving v converts same-side edges into cut edges
            const std::uint64_t new_a = size_a + (in_a[v] ? -1 : +1);
            const std::uint64_t new_b = size_b + (in_a[v] ? +1 : -1);
            if (new_a == 0 || new_b == 0 ||
                std::max(new_a, new_b) > 2 * std::min(new_a, new_b))
                continue;
            in_a[v] = !in_a[v];
            size_a = new_a;
            size_b = new_b;
            moved = true;
        }
    }

    Working w;
    for (VertexId v = 0; v < n; ++v)
        (in_a[v] ? w.side_a : w.side_b).push_back(v);
    for (const auto &[u, v] : g.edges()) {
        if (in_a[u] != in_a[v])
            w.edges.emplace_back(in_a[u] ? Edge{u, v} : Edge{v, u});
    }
    return w;
}

void drop_isolated(Working &w, const std::vector<std::uint32_t> &deg) {
    auto keep = [&](std::vector<VertexId> &side) {
        side.erase(std::remove_if(side.begin(), side.end(),
                                  [&](VertexId v) { return deg[v] == 0; }),
                   side.end());
    };
    keep(w.side_a);
    keep(w.side_b);
}

std::vector<std::uint32_t> degrees_of(const Working &w, VertexId n) {
    std::vector<std::uint32_t> deg(n, 0);
    for (const auto &[a, b] : w.edges) {
        ++deg[a];
        ++deg[b];
    }
    return deg;
}

} // namespace

RegularizeReport regularize(const GeneralGraph &g,
                            const RegularizeParams &p) {
    validate(p);
    const double n = g.num_vertices();
    if (static_cast<double>(g.edge_count()) <
        p.c_density * std::pow(n, 1.0 + p.alpha))
        fail(ErrorCode::TooSparse,
             "edge count below C * n^(1+alpha) = " +
                 std::to_string(p.c_density * std::pow(n, 1.0 + p.alpha)));

    const double k_target = p.effective_k_target();
    const std::uint32_t max_rounds =
        p.max_rounds > 0
            ? p.max_rounds
            : static_cast<std::uint32_t>(
                  std::ceil(std::log2(std::max(2.0, n))));

    Working w = initial_split(g, p.seed);
    std::uint32_t rounds = 0;
    double achieved_k = 0.0;

    for (; rounds < max_rounds; ++rounds) {
        auto deg = degrees_of(w, g.num_vertices());
        drop_isolated(w, deg);
        if (w.side_a.size() + w.side_b.size() < 4)
            fail(ErrorCode::DegenerateOutput,
                 "fewer than 4 vertices survived extraction");

        std::uint32_t min_d = UINT32_MAX, max_d = 0;
        for (VertexId v : w.side_a) {
            min_d = std::min(min_d, deg[v]);
            max_d = std::max(max_d, deg[v]);
        }
        for (VertexId v : w.side_b) {
            min_d = std::min(min_d, deg[v]);
            max_d = std::max(max_d, deg[v]);
        }
        achieved_k = static_cast<double>(max_d) / min_d;
        const bool balanced_now =
            std::max(w.side_a.size(), w.side_b.size()) <=
            2 * std::min(w.side_a.size(), w.side_b.size());
        if (achieved_k <= k_target && balanced_now)
            break;

        // Bucket both sides by dyadic degree range and pick the pair
        // maximizing edges / (size sum)^(1+alpha), lowest (i,j) on ties.
        constexpr std::uint32_t kBuckets = 33;
        std::vector<std::uint64_t> cnt_a(kBuckets, 0), cnt_b(kBuckets, 0);
        for (VertexId v : w.side_a)
            ++cnt_a[dyadic_bucket(deg[v])];
        for (VertexId v : w.side_b)
            ++cnt_b[dyadic_bucket(deg[v])];
        std::vector<std::uint64_t> pair_edges(kBuckets * kBuckets, 0);
        for (const auto &[a, b] : w.edges)
            ++pair_edges[dyadic_bucket(deg[a]) * kBuckets +
                         dyadic_bucket(deg[b])];

        std::uint32_t best_i = 0, best_j = 0;
        double best_score = -1.0;
        for (std::uint32_t i = 0; i < kBuckets; ++i)
            for (std::uint32_t j = 0; j < kBuckets; ++j) {
                const std::uint64_t e = pair_edges[i * kBuckets + j];
                if (e == 0)
                    continue;
                const double m = static_cast<double>(cnt_a[i] + cnt_b[j]);
                const double score =
                    static_cast<double>(e) / std::pow(m, 1.0 + p.alpha);
                if (score > best_score) {
                    best_score = score;
                    best_i = i;
                    best_j = j;
                }
            }
        if (best_score < 0.0)
            fail(ErrorCode::DegenerateOutput, "no edges survived bucketing");

        Working next;
        for (VertexId v : w.side_a)
            if (dyadic_bucket(deg[v]) == best_i)
                next.side_a.push_back(v);
        for (VertexId v : w.side_b)
            if (dyadic_bucket(deg[v]) == best_j)
                next.side_b.push_back(v);
        for (const auto &[a, b] : w.edges)
            if (dyadic_bucket(deg[a]) == best_i &&
                dyadic_bucket(deg[b]) == best_j)
                next.edges.push_back({a, b});
        w = std::move(next);

        // Trim the larger side, lowest current degree first (ties: lowest
        // id), until the parts are within a factor 2.
        auto cur_deg = degrees_of(w, g.num_vertices());
        std::vector<std::uint8_t> removed(g.num_vertices(), 0);
        auto side_size = [&](const std::vector<VertexId> &side) {
            std::uint64_t c = 0;
            for (VertexId v : side)
                c += !removed[v];
            return c;
        };
        while (true) {
            const std::uint64_t na = side_size(w.side_a);
            const std::uint64_t nb = side_size(w.side_b);
            if (na == 0 || nb == 0 ||
                std::max(na, nb) <= 2 * std::min(na, nb))
                break;
            auto &larger = na > nb ? w.side_a : w.side_b;
            VertexId victim = UINT32_MAX;
            for (VertexId v : larger)
                if (!removed[v] &&
                    (victim == UINT32_MAX || cur_deg[v] < cur_deg[victim]))
                    victim = v;
            removed[victim] = 1;
            for (const auto &[a, b] : w.edges) {
                if (a == victim && !removed[b])
                    --cur_deg[b];
                else if (b == victim && !removed[a])
                    --cur_deg[a];
            }
        }
        auto alive = [&](VertexId v) { return !removed[v]; };
        w.side_a.erase(std::remove_if(w.side_a.begin(), w.side_a.end(),
                                      [&](VertexId v) { return !alive(v); }),
                       w.side_a.end());
        w.side_b.erase(std::remove_if(w.side_b.begin(), w.side_b.end(),
                                      [&](VertexId v) { return !alive(v); }),
                       w.side_b.end());
        w.edges.erase(std::remove_if(w.edges.begin(), w.edges.end(),
                                     [&](const Edge &e) {
                                         return !alive(e.first) ||
                                                !alive(e.second);
                                     }),
                      w.edges.end());
    }

    // Final cleanup mirrors the loop head so the report is built from the
    // same state the loop would have seen next.
    {
        auto deg = degrees_of(w, g.num_vertices());
        drop_isolated(w, deg);
    }
    if (w.side_a.size() + w.side_b.size() < 4)
        fail(ErrorCode::DegenerateOutput,
             "fewer than 4 vertices survived extraction");

    RegularizeReport rep;
    rep.orig_a = w.side_a;
    rep.orig_b = w.side_b;
    std::sort(rep.orig_a.begin(), rep.orig_a.end());
    std::sort(rep.orig_b.begin(), rep.orig_b.end());
    std::vector<VertexId> local(g.num_vertices(), 0);
    for (std::uint32_t i = 0; i < rep.orig_a.size(); ++i)
        local[rep.orig_a[i]] = i;
    for (std::uint32_t j = 0; j < rep.orig_b.size(); ++j)
        local[rep.orig_b[j]] =
            static_cast<VertexId>(rep.orig_a.size() + j);
    std::vector<Edge> local_edges;
    local_edges.reserve(w.edges.size());
    for (const auto &[a, b] : w.edges)
        local_edges.emplace_back(local[a], local[b]);
    rep.subgraph = BipartiteGraph::build(
        static_cast<VertexId>(rep.orig_a.size()),
        static_cast<VertexId>(rep.orig_b.size()), local_edges);

    rep.m = rep.subgraph.num_vertices();
    const auto st = degree_stats(rep.subgraph);
    rep.achieved_k = static_cast<double>(st.max) / st.min;
    rep.density_ratio = static_cast<double>(rep.subgraph.edge_count()) /
                        std::pow(rep.m, 1.0 + p.alpha);
    rep.balanced = is_balanced(rep.subgraph);
    rep.rounds = rounds;
    if (rep.achieved_k > k_target)
        fail(ErrorCode::DegenerateOutput,
             "degree-ratio target unreachable within the round limit");
    return rep;
}

bool verify_regularization(const RegularizeReport &r,
                           const RegularizeParams &p) {
    const auto &g = r.subgraph;
    if (g.num_vertices() != r.m || g.num_vertices() < 4)
        return false;
    if (r.orig_a.size() != g.num_a() || r.orig_b.size() != g.num_b())
        return false;
    const auto st = degree_stats(g);
    if (st.min < 1)
        return false;
    const double k = static_cast<double>(st.max) / st.min;
    const double ratio = static_cast<double>(g.edge_count()) /
                         std::pow(r.m, 1.0 + p.alpha);
    auto close = [](double x, double y) {
        return std::abs(x - y) <= 1e-9 * std::max({1.0, std::abs(x),
                                                   std::abs(y)});
    };
    return close(k, r.achieved_k) && close(ratio, r.density_ratio) &&
           r.balanced == is_balanced(g) && k <= p.effective_k_target();
}

} // namespace subdiv
