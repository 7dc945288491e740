#include "subdiv/embed.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "subdiv/kernels.hpp"
#include "subdiv/oracle.hpp"

namespace subdiv {

double delta_threshold(std::uint32_t s, std::uint32_t t, double c,
                       std::uint64_t n) {
    if (s < 1 || t < 3)
        fail(ErrorCode::InvalidParams, "need s >= 1 and t >= 3");
    if (n < 1)
        fail(ErrorCode::InvalidParams, "need n >= 1");
    if (!(c > 0.0))
        fail(ErrorCode::InvalidParams, "c must be positive");
    const double exponent =
        (static_cast<double>(t) - 2.0) / (2.0 * t - 3.0);
    return c * std::pow(static_cast<double>(n), exponent);
}

namespace {

void validate_params(const EmbedParams &p) {
    if (p.s < 1 || p.t < 3)
        fail(ErrorCode::InvalidParams, "need s >= 1 and t >= 3");
    if (p.k_ratio != 0.0 && p.k_ratio < 1.0)
        fail(ErrorCode::InvalidParams,
             "degree-ratio bound below 1 (use 0 to derive it)");
    if (!(p.c > 0.0) || !(p.slack > 0.0))
        fail(ErrorCode::InvalidParams, "c and slack must be positive");
}

bool is_light(std::uint32_t weight, std::uint64_t threshold) {
    return weight >= 1 && weight < threshold;
}

// Mark every A-vertex with a neighbour in N(u) cap N(v); these are exactly
// the vertices whose triple intersection with u and v is nonempty.
void stamp_triple_hits(const BipartiteGraph &g, VertexId u, VertexId v,
                       std::vector<std::uint8_t> &bad) {
    const auto nu = g.neighbors(u);
    const auto nv = g.neighbors(v);
    std::size_t i = 0, j = 0;
    while (i < nu.size() && j < nv.size()) {
        if (nu[i] < nv[j]) {
            ++i;
        } else if (nu[i] > nv[j]) {
            ++j;
        } else {
            for (VertexId x : g.neighbors(nu[i]))
                bad[x] = 1;
            ++i;
            ++j;
        }
    }
}

double derived_k_ratio(const BipartiteGraph &g) {
    const auto st = degree_stats(g);
    if (st.min == 0)
        fail(ErrorCode::PreconditionFailed, "host has an isolated vertex");
    return static_cast<double>(st.max) / st.min;
}

} // namespace

std::optional<std::vector<VertexId>>
find_heavy_clique(const NeighbourhoodWeights &w, std::uint32_t s,
                  std::uint32_t t, std::uint64_t budget) {
    if (s < 1 || t < 3)
        fail(ErrorCode::InvalidParams, "need s >= 1 and t >= 3");
    const std::uint32_t r = s + t - 1;
    const std::uint64_t thr = light_threshold(s, t);
    if (budget == 0)
        budget = r <= 6 ? UINT64_MAX : default_budget();

    const VertexId n = w.num_a();
    std::vector<std::vector<VertexId>> heavy(n);
    for (VertexId u = 0; u < n; ++u)
        for (const auto &e : w.row(u))
            if (e.w >= thr)
                heavy[u].push_back(e.v); // rows are sorted by id already

    std::vector<VertexId> clique, cands;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;

    auto dfs = [&](auto &&self, const std::vector<VertexId> &pool) -> bool {
        if (clique.size() == r)
            return true;
        if (clique.size() + pool.size() < r)
            return false;
        for (std::size_t idx = 0; idx < pool.size(); ++idx) {
            if (++nodes > budget) {
                out_of_budget = true;
                return false;
            }
            const VertexId v = pool[idx];
            if (heavy[v].size() + 1 < r)
                continue;
            std::vector<VertexId> next;
            // pool is ascending; restrict to later vertices to avoid
            // revisiting permutations, then intersect with heavy[v]
            std::set_intersection(pool.begin() + idx + 1, pool.end(),
                                  heavy[v].begin(), heavy[v].end(),
                                  std::back_inserter(next));
            clique.push_back(v);
            if (self(self, next))
                return true;
            clique.pop_back();
            if (out_of_budget)
                return false;
        }
        return false;
    };

    std::vector<VertexId> all;
    for (VertexId v = 0; v < n; ++v)
        if (heavy[v].size() + 1 >= r)
            all.push_back(v);
    if (dfs(dfs, all))
        return clique;
    return std::nullopt;
}

std::variant<std::vector<VertexId>, ThresholdFailure>
find_branch_vertices(const BipartiteGraph &g, const NeighbourhoodWeights &w,
                     const EmbedParams &p, EmbedTrace &trace) {
    validate_params(p);
    const auto st = degree_stats(g);
    if (st.min == 0)
        fail(ErrorCode::PreconditionFailed, "host has an isolated vertex");
    const double delta = st.min;
    const double n = g.num_b();
    const double n_a = g.num_a();
    const std::uint64_t thr = light_threshold(p.s, p.t);
    const double stp = static_cast<double>(p.s) + p.t;
    const double base = delta * delta / (32.0 * stp * stp * stp * n);
    const double entry_gate = p.slack * 8.0 * stp * n / delta;

    trace.delta = delta;
    trace.k_ratio = p.k_ratio > 0.0 ? p.k_ratio : derived_k_ratio(g);

    if (n_a < entry_gate)
        return ThresholdFailure{1, g.num_a(), entry_gate, trace};

    std::vector<VertexId> chosen;
    std::vector<std::uint8_t> bad(g.num_a(), 0);
    std::vector<std::uint8_t> in_u(g.num_a(), 0);
    // current U_0: vertices light to every chosen u, ascending
    std::vector<VertexId> u0(g.num_a());
    for (VertexId v = 0; v < g.num_a(); ++v)
        u0[v] = v;

    for (std::uint32_t step = 1; step + 1 <= p.t; ++step) {
        // newest pair stampings keep `bad` equal to the union over all
        // chosen pairs of the forbidden-triple hits
        if (chosen.size() >= 2)
            for (std::size_t j = 0; j + 1 < chosen.size(); ++j)
                stamp_triple_hits(g, chosen[j], chosen.back(), bad);

        std::vector<VertexId> u_set;
        u_set.reserve(u0.size());
        for (VertexId v : u0)
            if (!bad[v])
                u_set.push_back(v);

        if (step > 1 &&
            static_cast<double>(u_set.size()) < entry_gate) {
            return ThresholdFailure{step, u_set.size(), entry_gate, trace};
        }

        for (VertexId v : u_set)
            in_u[v] = 1;
        VertexId pick = 0;
        std::uint64_t pick_light = 0;
        bool have = false;
        for (VertexId v : u_set) {
            std::uint64_t cnt = 0;
            for (const auto &e : w.row(v))
                if (in_u[e.v] && is_light(e.w, thr))
                    ++cnt;
            if (!have || cnt > pick_light) {
                have = true;
                pick = v;
                pick_light = cnt;
            }
        }
        for (VertexId v : u_set)
            in_u[v] = 0;
        if (!have)
            return ThresholdFailure{step, 0, entry_gate, trace};

        // shrink U_0 to the vertices light to the new u as well
        std::vector<VertexId> next_u0;
        next_u0.reserve(u0.size());
        for (VertexId v : u0)
            if (v != pick && is_light(w.weight(pick, v), thr))
                next_u0.push_back(v);

        const double demanded =
            p.slack * std::pow(base, static_cast<double>(step)) * n_a;
        BranchStep rec;
        rec.u = pick;
        rec.u0_size = u0.size();
        rec.u_size = u_set.size();
        rec.light_degree = pick_light;
        rec.next_set = next_u0.size();
        rec.demanded = demanded;
        trace.branch.push_back(rec);
        chosen.push_back(pick);
        u0 = std::move(next_u0);

        if (static_cast<double>(u0.size()) < demanded)
            return ThresholdFailure{step, u0.size(), demanded, trace};
    }
    return chosen;
}

std::variant<std::vector<VertexId>, SelectionFailure>
find_s_vertices(const BipartiteGraph &g, const NeighbourhoodWeights &w,
                std::span<const VertexId> us, const EmbedParams &p,
                EmbedTrace &trace) {
    validate_params(p);
    if (us.size() != p.t - 1)
        fail(ErrorCode::InvalidBranchSet, "expected t-1 branch vertices");
    const std::uint64_t thr = light_threshold(p.s, p.t);
    for (std::size_t i = 0; i < us.size(); ++i) {
        if (!g.in_a(us[i]))
            fail(ErrorCode::InvalidBranchSet, "branch vertex outside A");
        for (std::size_t j = i + 1; j < us.size(); ++j)
            if (!is_light(w.weight(us[i], us[j]), thr))
                fail(ErrorCode::PreconditionFailed,
                     "branch pair is not light");
    }

    const auto st = degree_stats(g);
    const double delta = st.min;
    const double k_ratio =
        p.k_ratio > 0.0 ? p.k_ratio : derived_k_ratio(g);

    // V: vertices light to every u_j, ascending by id
    std::vector<VertexId> v_set;
    for (VertexId v = 0; v < g.num_a(); ++v) {
        if (std::find(us.begin(), us.end(), v) != us.end())
            continue;
        bool ok = true;
        for (VertexId u : us)
            if (!is_light(w.weight(u, v), thr)) {
                ok = false;
                break;
            }
        if (ok)
            v_set.push_back(v);
    }

    const double tm1 = static_cast<double>(p.t) - 1.0;
    const double gate = p.slack *
                        (tm1 * (tm1 - 1.0) / 2.0 +
                         tm1 * (static_cast<double>(p.s) - 1.0)) *
                        static_cast<double>(choose2(p.s + p.t - 1)) *
                        k_ratio * delta;
    trace.v_set_size = v_set.size();
    trace.v_demanded = gate;

    SelectionFailure fail_info;
    fail_info.v_set_size = v_set.size();
    fail_info.demanded = gate;
    if (static_cast<double>(v_set.size()) <= gate) {
        fail_info.trace = trace;
        return fail_info;
    }

    std::vector<std::uint8_t> bad_uu(g.num_a(), 0), bad_uv(g.num_a(), 0);
    for (std::size_t i = 0; i < us.size(); ++i)
        for (std::size_t j = i + 1; j < us.size(); ++j)
            stamp_triple_hits(g, us[i], us[j], bad_uu);
    std::uint64_t uu_marked = 0;
    for (VertexId v = 0; v < g.num_a(); ++v)
        uu_marked += bad_uu[v];

    std::vector<VertexId> accepted;
    std::uint64_t uv_marked = 0;
    for (VertexId v : v_set) {
        if (accepted.size() == p.s)
            break;
        if (bad_uu[v]) {
            ++fail_info.rejected_uu;
            continue;
        }
        if (bad_uv[v]) {
            ++fail_info.rejected_uv;
            continue;
        }
        SVertexStep step;
        step.v = v;
        step.bad_uu = uu_marked;
        step.bad_uv = uv_marked;
        trace.s_vertices.push_back(step);
        accepted.push_back(v);
        if (accepted.size() == p.s)
            break;
        for (VertexId u : us)
            stamp_triple_hits(g, u, v, bad_uv);
        uv_marked = 0;
        for (VertexId x = 0; x < g.num_a(); ++x)
            uv_marked += bad_uv[x];
    }

    if (accepted.size() < p.s) {
        fail_info.accepted = static_cast<std::uint32_t>(accepted.size());
        fail_info.trace = trace;
        return fail_info;
    }
    return accepted;
}

SubdivisionCertificate
assemble_subdivision(const BipartiteGraph &g,
                     std::span<const VertexId> branch_images,
                     const Pattern &pattern, AssembleMode mode) {
    if (branch_images.size() != pattern.vertex_count())
        fail(ErrorCode::InvalidBranchSet,
             "need exactly " + std::to_string(pattern.vertex_count()) +
                 " branch images");
    for (VertexId v : branch_images)
        if (!g.in_a(v))
            fail(ErrorCode::InvalidBranchSet, "branch image outside A");
    {
        std::vector<VertexId> sorted(branch_images.begin(),
                                     branch_images.end());
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            fail(ErrorCode::InvalidBranchSet, "branch images repeat");
    }

    SubdivisionCertificate cert;
    cert.branch.assign(branch_images.begin(), branch_images.end());
    std::vector<std::uint8_t> used(g.num_vertices(), 0);
    for (const auto &[x, y] : pattern.edges) {
        const auto nx = g.neighbors(branch_images[x]);
        const auto ny = g.neighbors(branch_images[y]);
        VertexId mid = 0;
        bool found = false;
        std::size_t i = 0, j = 0;
        while (i < nx.size() && j < ny.size()) {
            if (nx[i] < ny[j]) {
                ++i;
            } else if (nx[i] > ny[j]) {
                ++j;
            } else {
                if (mode == AssembleMode::LightPath || !used[nx[i]]) {
                    mid = nx[i];
                    found = true;
                    break;
                }
                ++i;
                ++j;
            }
        }
        if (!found)
            fail(ErrorCode::InvalidBranchSet,
                 "pattern edge " + pattern.vertex_name(x) + "-" +
                     pattern.vertex_name(y) + " has no free midpoint");
        if (used[mid])
            throw std::logic_error(
                "midpoint collision in light-path assembly; the emptiness "
                "conditions forbid this");
        used[mid] = 1;
        cert.midpoints.push_back(mid);
    }
    return cert;
}

bool validate_certificate(const BipartiteGraph &g,
                          const SubdivisionCertificate &cert,
                          const Pattern &pattern) {
    if (cert.branch.size() != pattern.vertex_count() ||
        cert.midpoints.size() != pattern.edge_count())
        return false;
    for (VertexId v : cert.branch)
        if (!g.in_a(v))
            return false;
    for (VertexId b : cert.midpoints)
        if (!g.in_b(b))
            return false;
    auto distinct = [](std::vector<VertexId> v) {
        std::sort(v.begin(), v.end());
        return std::adjacent_find(v.begin(), v.end()) == v.end();
    };
    if (!distinct(cert.branch) || !distinct(cert.midpoints))
        return false;
    for (std::size_t j = 0; j < pattern.edges.size(); ++j) {
        const auto &[x, y] = pattern.edges[j];
        if (!g.has_edge(cert.branch[x], cert.midpoints[j]) ||
            !g.has_edge(cert.branch[y], cert.midpoints[j]))
            return false;
    }
    return true;
}

bool validate_certificate(const GeneralGraph &g,
                          const SubdivisionCertificate &cert,
                          const Pattern &pattern) {
    if (cert.branch.size() != pattern.vertex_count() ||
        cert.midpoints.size() != pattern.edge_count())
        return false;
    std::vector<VertexId> all(cert.branch);
    all.insert(all.end(), cert.midpoints.begin(), cert.midpoints.end());
    for (VertexId v : all)
        if (v >= g.num_vertices())
            return false;
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        return false;
    for (std::size_t j = 0; j < pattern.edges.size(); ++j) {
        const auto &[x, y] = pattern.edges[j];
        if (!g.has_edge(cert.branch[x], cert.midpoints[j]) ||
            !g.has_edge(cert.branch[y], cert.midpoints[j]))
            return false;
    }
    return true;
}

EmbedResult embed(const BipartiteGraph &g, const EmbedParams &p) {
    validate_params(p);
    if (g.num_a() == 0 || g.num_b() == 0)
        fail(ErrorCode::EmptyGraph, "host has an empty part");
    if (!is_balanced(g))
        fail(ErrorCode::PreconditionFailed, "host is not balanced");
    const auto st = degree_stats(g);
    if (st.min == 0)
        fail(ErrorCode::PreconditionFailed, "host has an isolated vertex");
    if (p.k_ratio > 0.0 &&
        static_cast<double>(st.max) > p.k_ratio * st.min)
        fail(ErrorCode::PreconditionFailed,
             "host degrees exceed the stated ratio bound");

    const Pattern pattern = make_pattern(p.s, p.t);
    const NeighbourhoodWeights w = neighbourhood_weights(g);

    EmbedTrace trace;
    trace.delta = st.min;
    trace.k_ratio = p.k_ratio > 0.0 ? p.k_ratio : derived_k_ratio(g);

    if (auto clique = find_heavy_clique(w, p.s, p.t)) {
        auto cert = assemble_subdivision(g, *clique, pattern,
                                         AssembleMode::HeavyClique);
        if (!validate_certificate(g, cert, pattern))
            throw std::logic_error("heavy-clique certificate invalid");
        return EmbedSuccess{std::move(cert), std::move(trace), true};
    }

    auto branch = find_branch_vertices(g, w, p, trace);
    if (auto *tf = std::get_if<ThresholdFailure>(&branch))
        return std::move(*tf);
    const auto &us = std::get<std::vector<VertexId>>(branch);

    auto svs = find_s_vertices(g, w, us, p, trace);
    if (auto *sf = std::get_if<SelectionFailure>(&svs))
        return std::move(*sf);
    const auto &vs = std::get<std::vector<VertexId>>(svs);

    std::vector<VertexId> images(vs);
    images.insert(images.end(), us.begin(), us.end());
    auto cert =
        assemble_subdivision(g, images, pattern, AssembleMode::LightPath);
    if (!validate_certificate(g, cert, pattern))
        throw std::logic_error("light-path certificate invalid");
    return EmbedSuccess{std::move(cert), std::move(trace), false};
}

PipelineResult pipeline_embed(const GeneralGraph &g,
                              const RegularizeParams &rp,
                              const EmbedParams &ep) {
    PipelineResult out;
    out.regularization = regularize(g, rp);
    out.embedding = embed(out.regularization.subgraph, ep);

    const auto &rep = out.regularization;
    auto to_original = [&rep](VertexId local) {
        return local < rep.subgraph.num_a()
                   ? rep.orig_a[local]
                   : rep.orig_b[local - rep.subgraph.num_a()];
    };
    if (auto *succ = std::get_if<EmbedSuccess>(&out.embedding)) {
        for (VertexId &v : succ->certificate.branch)
            v = to_original(v);
        for (VertexId &b : succ->certificate.midpoints)
            b = to_original(b);
        for (BranchStep &bs : succ->trace.branch)
            bs.u = to_original(bs.u);
        for (SVertexStep &sv : succ->trace.s_vertices)
            sv.v = to_original(sv.v);
    }
    return out;
}

} // namespace subdiv
