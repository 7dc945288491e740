#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "subdiv/graph.hpp"
#include "subdiv/io.hpp"
#include "testutil.hpp"

using namespace subdiv;

TEST_CASE("bipartite build and adjacency") {
    std::vector<Edge> e = {{0, 3}, {0, 4}, {1, 3}, {2, 5}};
    auto g = BipartiteGraph::build(3, 3, e);
    CHECK(g.num_a() == 3);
    CHECK(g.num_b() == 3);
    CHECK(g.num_vertices() == 6);
    CHECK(g.edge_count() == 4);
    CHECK(g.degree(0) == 2);
    CHECK(g.degree(3) == 2);
    CHECK(g.has_edge(0, 4));
    CHECK(g.has_edge(4, 0)); // symmetric lookup
    CHECK_FALSE(g.has_edge(1, 4));
    CHECK(g.in_a(2));
    CHECK(g.in_b(3));
    CHECK_FALSE(g.in_b(2));
    auto ns = g.neighbors(3);
    CHECK(std::vector<VertexId>(ns.begin(), ns.end()) ==
          std::vector<VertexId>{0, 1});
    CHECK(g.edges() == e);
}

TEST_CASE("bipartite build rejects bad edges") {
    std::vector<Edge> same_side = {{0, 1}};
    CHECK_THROWS_AS((void)BipartiteGraph::build(2, 2, same_side), Error);
    std::vector<Edge> out_of_range = {{0, 4}};
    CHECK_THROWS_AS((void)BipartiteGraph::build(2, 2, out_of_range), Error);
    std::vector<Edge> dup = {{0, 2}, {2, 0}};
    try {
        (void)BipartiteGraph::build(2, 2, dup);
        FAIL("duplicate accepted");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::DuplicateEdge);
    }
}

TEST_CASE("general graph basics") {
    auto g = testutil::cycle(5);
    CHECK(g.num_vertices() == 5);
    CHECK(g.edge_count() == 5);
    CHECK(g.has_edge(4, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    for (VertexId v = 0; v < 5; ++v)
        CHECK(g.degree(v) == 2);
    CHECK_THROWS_AS((void)GeneralGraph::build(3, std::vector<Edge>{{1, 1}}),
                    Error);
}

TEST_CASE("degree stats and regularity predicates") {
    auto g = BipartiteGraph::build(
        2, 3, std::vector<Edge>{{0, 2}, {0, 3}, {0, 4}, {1, 2}});
    auto st = degree_stats(g);
    CHECK(st.min == 1);
    CHECK(st.max == 3);
    CHECK(st.mean == doctest::Approx(8.0 / 5));
    CHECK(is_k_almost_regular(g, 3.0));
    CHECK_FALSE(is_k_almost_regular(g, 2.9));

    auto iso = BipartiteGraph::build(2, 2, std::vector<Edge>{{0, 2}});
    CHECK_FALSE(is_k_almost_regular(iso, 100.0)); // isolated vertex

    CHECK(is_balanced(BipartiteGraph::build(2, 4, {})));
    CHECK_FALSE(is_balanced(BipartiteGraph::build(2, 5, {})));
}

TEST_CASE("view conversions round-trip") {
    auto bip = testutil::complete_bip(3, 4);
    auto gen = to_general(bip);
    CHECK(gen.num_vertices() == 7);
    CHECK(gen.edge_count() == 12);
    auto back = bipartite_view(gen, 3);
    CHECK(back.edges() == bip.edges());

    // an edge inside the claimed A part
    auto tri = testutil::complete(3);
    CHECK_THROWS_AS((void)bipartite_view(tri, 2), Error);
}

TEST_CASE("girth") {
    CHECK(girth(testutil::cycle(6)) == 6);
    CHECK(girth(testutil::cycle(8)) == 8);
    CHECK(girth(testutil::complete(4)) == 3);
    CHECK(girth(testutil::petersen()) == 5);
    CHECK(girth(testutil::hypercube(3)) == 4);
    CHECK_FALSE(girth(testutil::path(6)).has_value());
    CHECK_FALSE(girth(GeneralGraph::build(3, {})).has_value());
}

TEST_CASE("edge list io round-trip") {
    auto bip = testutil::complete_bip(2, 3);
    std::stringstream ss;
    write_host(ss, bip);
    auto host = read_host(ss);
    auto *b = std::get_if<BipartiteGraph>(&host);
    REQUIRE(b != nullptr);
    CHECK(b->edges() == bip.edges());

    auto gen = testutil::petersen();
    std::stringstream ss2;
    write_host(ss2, gen);
    auto host2 = read_host(ss2);
    auto *g = std::get_if<GeneralGraph>(&host2);
    REQUIRE(g != nullptr);
    CHECK(g->edges() == gen.edges());
}

TEST_CASE("reader skips comments and blanks, rejects junk") {
    std::stringstream ok("# a comment\n\nbip 1 1\n# mid\n0 1\n");
    auto host = read_host(ok);
    CHECK(std::get<BipartiteGraph>(host).edge_count() == 1);

    auto expect_parse_error = [](const char *text) {
        std::stringstream ss(text);
        try {
            (void)read_host(ss);
            return false;
        } catch (const Error &e) {
            return e.code() == ErrorCode::ParseError;
        }
    };
    CHECK(expect_parse_error("digraph 3\n"));
    CHECK(expect_parse_error("bip 2\n"));
    CHECK(expect_parse_error("graph 2\n0\n"));
    CHECK(expect_parse_error("graph 2\n0 5\n"));
    CHECK(expect_parse_error(""));
}
