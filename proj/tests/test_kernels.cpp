#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "subdiv/constructions.hpp"
#include "subdiv/kernels.hpp"
#include "subdiv/rng.hpp"
#include "testutil.hpp"

using namespace subdiv;

namespace {

std::vector<VertexId> all_a(const BipartiteGraph &g) {
    std::vector<VertexId> v(g.num_a());
    std::iota(v.begin(), v.end(), 0u);
    return v;
}

std::vector<VertexId> random_subset(Rng &rng, VertexId n_a, std::size_t k) {
    std::vector<VertexId> pool(n_a);
    std::iota(pool.begin(), pool.end(), 0u);
    rng.shuffle(pool);
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

} // namespace

TEST_CASE("choose2 and light threshold") {
    CHECK(choose2(0) == 0);
    CHECK(choose2(1) == 0);
    CHECK(choose2(2) == 1);
    CHECK(choose2(7) == 21);
    CHECK(light_threshold(1, 3) == 3);  // C(3,2)
    CHECK(light_threshold(2, 3) == 6);  // C(4,2)
    CHECK(light_threshold(4, 6) == 36); // C(9,2)
}

TEST_CASE("edge classification boundaries") {
    // In K_{2,k} the one A-pair has codegree exactly k; sweep k across the
    // s=1, t=3 threshold C(3,2)=3.
    const EdgeClass expected[] = {EdgeClass::Absent, EdgeClass::Light,
                                  EdgeClass::Light, EdgeClass::Heavy,
                                  EdgeClass::Heavy};
    for (std::uint32_t k = 0; k <= 4; ++k) {
        auto g = k == 0 ? BipartiteGraph::build(2, 1, {})
                        : testutil::complete_bip(2, k);
        auto w = neighbourhood_weights(g);
        CHECK(classify_edge(w, 0, 1, 1, 3) == expected[k]);
    }
}

TEST_CASE("weights match brute-force codegrees") {
    Rng rng(42);
    for (int round = 0; round < 20; ++round) {
        const VertexId na = 5 + rng.below(45), nb = 5 + rng.below(45);
        const double p = 0.05 + 0.2 * (round % 5);
        auto g = random_bipartite(na, nb, p, rng.next());
        auto w = neighbourhood_weights(g);
        for (VertexId u = 0; u < na; ++u)
            for (VertexId v = u + 1; v < na; ++v)
                CHECK(w.weight(u, v) == testutil::naive_codegree(g, u, v));
    }
}

TEST_CASE("wedge identity across random hosts") {
    // Each wedge a-b-a' contributes exactly once to the codegree of one
    // pair, so three independent computations must agree.
    Rng rng(7);
    for (int round = 0; round < 100; ++round) {
        const VertexId na = 2 + rng.below(60), nb = 2 + rng.below(60);
        const double p = 0.02 + 0.01 * rng.below(40);
        auto g = random_bipartite(na, nb, p, rng.next());
        auto u = all_a(g);
        const std::uint64_t via_structure =
            total_weight(neighbourhood_weights(g), u);
        CHECK(via_structure == wedge_count(g));
        CHECK(via_structure == total_weight_in(g, u));
    }
}

TEST_CASE("restricted weight agrees with masked recomputation") {
    Rng rng(13);
    auto g = random_bipartite(40, 60, 0.2, 3);
    auto w = neighbourhood_weights(g);
    for (int round = 0; round < 30; ++round) {
        auto u = random_subset(rng, 40, 2 + rng.below(38));
        std::uint64_t brute = 0;
        for (std::size_t i = 0; i < u.size(); ++i)
            for (std::size_t j = i + 1; j < u.size(); ++j)
                brute += testutil::naive_codegree(g, u[i], u[j]);
        CHECK(total_weight_in(g, u) == brute);
        CHECK(total_weight(w, u) == brute);
    }
}

TEST_CASE("light edge counting, generic and hinted paths") {
    Rng rng(99);
    const std::uint64_t thr = light_threshold(1, 3);
    for (int round = 0; round < 25; ++round) {
        auto g = random_bipartite(30, 30, 0.1 + 0.02 * round, rng.next());
        auto u = random_subset(rng, 30, 5 + rng.below(25));
        std::uint64_t brute = 0;
        for (std::size_t i = 0; i < u.size(); ++i)
            for (std::size_t j = i + 1; j < u.size(); ++j) {
                const auto c = testutil::naive_codegree(g, u[i], u[j]);
                if (c >= 1 && c < thr)
                    ++brute;
            }
        CHECK(light_edges_in(g, u, thr) == brute);
    }

    // On a codegree-1 host the hinted path takes the wedge shortcut; it
    // must agree with the generic count.
    auto gq = gq_incidence(3);
    CHECK(max_codegree(gq) == 1);
    auto u = all_a(gq);
    CHECK(light_edges_in(gq, u, thr, 1) == light_edges_in(gq, u, thr));
    CHECK(light_edges_in(gq, u, thr, 1) == wedge_count(gq));
}

TEST_CASE("serial references agree with the parallel kernels") {
    Rng rng(5);
    const std::uint64_t thr = light_threshold(2, 4);
    for (int round = 0; round < 15; ++round) {
        const VertexId na = 10 + rng.below(90), nb = 10 + rng.below(90);
        auto g = random_bipartite(na, nb, 0.05 + 0.03 * (round % 7),
                                  rng.next());
        auto u = random_subset(rng, na, 2 + rng.below(na - 2));
        CHECK(max_codegree(g) == max_codegree_serial(g));
        CHECK(total_weight_in(g, u) == total_weight_in_serial(g, u));
        CHECK(light_edges_in(g, u, thr) == light_edges_in_serial(g, u, thr));
        auto wp = neighbourhood_weights(g);
        auto ws = neighbourhood_weights_serial(g);
        REQUIRE(wp.pair_count() == ws.pair_count());
        for (VertexId a = 0; a < na; ++a) {
            auto rp = wp.row(a), rs = ws.row(a);
            REQUIRE(rp.size() == rs.size());
            for (std::size_t i = 0; i < rp.size(); ++i) {
                CHECK(rp[i].v == rs[i].v);
                CHECK(rp[i].w == rs[i].w);
            }
        }
    }
}

TEST_CASE("weight lookup rejects bad pairs") {
    auto g = testutil::complete_bip(3, 3);
    auto w = neighbourhood_weights(g);
    CHECK(w.weight(0, 1) == 3);
    CHECK_THROWS_AS((void)w.weight(0, 0), Error);
    CHECK_THROWS_AS((void)w.weight(0, 5), Error);
}

TEST_CASE("codegree helper matches the structure") {
    auto g = testutil::complete_bip(4, 5);
    CHECK(codegree(g, 0, 3) == 5);
    auto sparse = BipartiteGraph::build(
        3, 3, std::vector<Edge>{{0, 3}, {1, 3}, {1, 4}, {2, 5}});
    CHECK(codegree(sparse, 0, 1) == 1);
    CHECK(codegree(sparse, 0, 2) == 0);
}
