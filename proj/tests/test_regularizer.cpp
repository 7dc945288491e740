#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "subdiv/constructions.hpp"
#include "subdiv/regularize.hpp"
#include "subdiv/rng.hpp"
#include "testutil.hpp"

using namespace subdiv;

namespace {

GeneralGraph random_general(VertexId n, double p, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Edge> e;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (rng.bernoulli(p))
                e.emplace_back(u, v);
    return GeneralGraph::build(n, e);
}

bool ids_consistent(const RegularizeReport &r, const GeneralGraph &g) {
    const auto &sub = r.subgraph;
    if (r.orig_a.size() != sub.num_a() || r.orig_b.size() != sub.num_b())
        return false;
    for (const auto &[a, b] : sub.edges()) {
        const VertexId u = r.orig_a[a];
        const VertexId v = r.orig_b[b - sub.num_a()];
        if (!g.has_edge(u, v))
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("complete bipartite input survives nearly intact") {
    // K_{n,n} is already 1-regular in ratio terms; the cut step can split
    // the sides differently but no trimming should be needed.
    auto g = to_general(testutil::complete_bip(24, 24));
    RegularizeParams p;
    p.alpha = 1.0 / 3.0;
    p.c_density = 1.0;
    auto r = regularize(g, p);
    CHECK(r.balanced);
    CHECK(r.achieved_k == doctest::Approx(1.0).epsilon(0.25));
    // regular inputs must keep at least half their edges; the locally
    // maximal cut actually recovers the whole bipartition here
    CHECK(r.subgraph.edge_count() * 2 >= g.edge_count());
    CHECK(ids_consistent(r, g));
    CHECK(verify_regularization(r, p));
}

TEST_CASE("hypercube input") {
    auto g = testutil::hypercube(7); // 128 vertices, 7-regular, bipartite
    RegularizeParams p;
    p.alpha = 0.25; // 448 edges against 128^1.25 = 431: just dense enough
    auto r = regularize(g, p);
    CHECK(r.balanced);
    CHECK(r.m >= 4);
    CHECK(r.achieved_k <= p.effective_k_target());
    CHECK(r.subgraph.edge_count() * 2 >= g.edge_count());
    CHECK(ids_consistent(r, g));
    CHECK(verify_regularization(r, p));
}

TEST_CASE("dense random graphs regularize within the default target") {
    RegularizeParams p;
    p.alpha = 1.0 / 3.0;
    p.c_density = 1.0;
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        auto g = random_general(300, 0.15, seed);
        p.seed = seed;
        auto r = regularize(g, p);
        CHECK(r.balanced);
        CHECK(r.achieved_k <= p.effective_k_target());
        CHECK(r.density_ratio > 0.0);
        // balance here means within factor two, the embedder's requirement
        CHECK(std::max(r.subgraph.num_a(), r.subgraph.num_b()) <=
              2 * std::min(r.subgraph.num_a(), r.subgraph.num_b()));
        CHECK(ids_consistent(r, g));
        CHECK(verify_regularization(r, p));
    }
}

TEST_CASE("too-sparse inputs are refused up front") {
    // a path misses e >= C n^(4/3) by a mile
    std::vector<Edge> path;
    for (VertexId v = 0; v + 1 < 64; ++v)
        path.emplace_back(v, v + 1);
    RegularizeParams p;
    CHECK_THROWS_AS((void)regularize(GeneralGraph::build(64, path), p),
                    Error);
    try {
        (void)regularize(GeneralGraph::build(64, path), p);
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::TooSparse);
    }
}

TEST_CASE("an unreachable degree-ratio target is an error, not a lie") {
    // no subgraph of a random graph is perfectly regular after one round
    auto g = random_general(200, 0.2, 13);
    RegularizeParams p;
    p.k_target = 1.0;
    p.max_rounds = 1;
    try {
        (void)regularize(g, p);
        FAIL("expected DegenerateOutput");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::DegenerateOutput);
    }
}

TEST_CASE("verification notices tampering") {
    auto g = random_general(200, 0.2, 9);
    RegularizeParams p;
    auto r = regularize(g, p);
    REQUIRE(verify_regularization(r, p));

    SUBCASE("an edge vanishes") {
        auto edges = r.subgraph.edges();
        edges.pop_back();
        auto tampered = r;
        tampered.subgraph = BipartiteGraph::build(
            r.subgraph.num_a(), r.subgraph.num_b(), edges);
        CHECK_FALSE(verify_regularization(tampered, p));
    }
    SUBCASE("the degree ratio is understated") {
        auto tampered = r;
        tampered.achieved_k = 1.0;
        // only meaningful if the real ratio is not already 1
        if (r.achieved_k > 1.0 + 1e-9)
            CHECK_FALSE(verify_regularization(tampered, p));
    }
    SUBCASE("the vertex count lies") {
        auto tampered = r;
        tampered.m += 2;
        CHECK_FALSE(verify_regularization(tampered, p));
    }
}

TEST_CASE("round cap is honored") {
    auto g = random_general(300, 0.15, 4);
    RegularizeParams p;
    p.max_rounds = 1;
    auto r = regularize(g, p);
    CHECK(r.rounds <= 1);
}

TEST_CASE("alpha outside (0,1) is rejected") {
    auto g = random_general(50, 0.5, 1);
    RegularizeParams p;
    p.alpha = 0.0;
    CHECK_THROWS_AS((void)regularize(g, p), Error);
    p.alpha = 1.0;
    CHECK_THROWS_AS((void)regularize(g, p), Error);
    p.alpha = -0.5;
    CHECK_THROWS_AS((void)regularize(g, p), Error);
}

TEST_CASE("same seed, same subgraph") {
    auto g = random_general(250, 0.2, 77);
    RegularizeParams p;
    p.seed = 5;
    auto r1 = regularize(g, p);
    auto r2 = regularize(g, p);
    CHECK(r1.subgraph.edges() == r2.subgraph.edges());
    CHECK(r1.orig_a == r2.orig_a);
    CHECK(r1.rounds == r2.rounds);
}

TEST_CASE("default k target follows the alpha formula") {
    RegularizeParams p;
    p.alpha = 0.5;
    CHECK(p.effective_k_target() ==
          doctest::Approx(60.0 * std::pow(2.0, 1.0 + 1.0 / 0.25)));
    p.k_target = 7.5;
    CHECK(p.effective_k_target() == doctest::Approx(7.5));
}
