#include <doctest.h>

#include "gwse/errors.hpp"
#include "gwse/game.hpp"
#include "support/fixtures.hpp"

using namespace gwse;
using namespace gwse::testing;

TEST_CASE("parse the buchi pair: vertices, owners, edges, desugared buchi")
{
    const Game g = buchi_pair();
    CHECK(g.players() == 2);
    CHECK(g.graph.vertex_count() == 5);
    CHECK(g.graph.edge_count() == 9);
    CHECK(g.graph.initial() == vx(g.graph, "v0"));
    CHECK(g.graph.owner_value(vx(g.graph, "v0")) == 2);
    CHECK(g.graph.owner_value(vx(g.graph, "v2")) == 2);
    for (const char* id : {"v1", "v3", "v4"}) CHECK(g.graph.owner_value(vx(g.graph, id)) == 1);
    for (int p = 1; p <= 2; ++p)
        for (VertexId v = 0; v < 5; ++v)
            CHECK(g.spec(PlayerId(p)).priority[v] == (g.graph.id(v) == "v" + std::to_string(p) ? 2 : 1));
}

TEST_CASE("parse the co-buchi pair: co-buchi sugar becomes {1,0}")
{
    const Game g = cobuchi_pair();
    CHECK(validate_game(g).empty());
    const auto& p1 = g.spec(PlayerId(1)).priority;
    const auto& p2 = g.spec(PlayerId(2)).priority;
    for (VertexId v = 0; v < 6; ++v) {
        const std::string& id = g.graph.id(v);
        CHECK(p1[v] == (id == "v5" ? 0 : 1));
        CHECK(p2[v] == (id == "v4" || id == "v5" ? 0 : 1));
    }
}

TEST_CASE("single self-loop vertex is a valid one-player game")
{
    const Game g = parse_game(R"({"players":1,"init":"v","vertices":[{"id":"v","owner":1,"priority":{"1":0}}],
                                  "edges":[["v","v"]]})");
    CHECK(g.players() == 1);
    CHECK(validate_game(g).empty());
}

TEST_CASE("sink vertex is rejected")
{
    CHECK_THROWS_AS(parse_game(R"({"players":1,"init":"a","vertices":[{"id":"a","owner":1,"priority":{"1":0}},
                                   {"id":"b","owner":1,"priority":{"1":0}}],"edges":[["a","b"]]})"),
                    ValidationError);
}

TEST_CASE("validate_game reports one violation per defect")
{
    Game g = buchi_pair();
    SUBCASE("edge to undeclared vertex")
    {
        auto edges = g.graph.edges();
        edges.push_back(Edge{0, 17});
        g.graph = GameGraph(2, g.graph.ids(), g.graph.owners(), edges, 0);
        CHECK(validate_game(g).size() == 1);
    }
    SUBCASE("owner outside [1;k]")
    {
        auto owners = g.graph.owners();
        owners[4] = 3;
        g.graph = GameGraph(2, g.graph.ids(), owners, g.graph.edges(), 0);
        CHECK(validate_game(g).size() == 1);
    }
}

TEST_CASE("malformed documents raise ParseError")
{
    CHECK_THROWS_AS(parse_game("{"), ParseError);
    CHECK_THROWS_AS(parse_game(R"({"players":1})"), ParseError);
    CHECK_THROWS_AS(parse_game(R"({"players":1,"init":"v","vertices":[{"id":"v","owner":1}],"edges":[["v","v"]],
                                   "sugar":{"1":{"buchi":["v"],"cobuchi":["v"]}}})"),
                    ParseError);
}

TEST_CASE("induced_subgraph")
{
    const Game g1 = buchi_pair();
    const Game g2 = cobuchi_pair();
    SUBCASE("keep all, drop none is the identity")
    {
        const Digraph d = induced_subgraph(g1.graph, VertexSet(5, true));
        const Digraph full = to_digraph(g1.graph);
        CHECK(d.succ == full.succ);
        CHECK(d.active == full.active);
    }
    SUBCASE("dropping the co-buchi pair's escape edges hides v2 and v4")
    {
        const Digraph d = induced_subgraph(g2.graph, VertexSet(6, true), edges(g2.graph, {{"v1", "v2"}, {"v3", "v4"}}));
        const VertexSet r = reachable_from(d, vx(g2.graph, "v0"));
        CHECK_FALSE(r.contains(vx(g2.graph, "v2")));
        CHECK_FALSE(r.contains(vx(g2.graph, "v4")));
        CHECK(r == vset(g2.graph, {"v0", "v1", "v3", "v5"}));
    }
    SUBCASE("keeping v4 alone leaves its self-loop")
    {
        const VertexId v4 = vx(g1.graph, "v4");
        const Digraph d = induced_subgraph(g1.graph, VertexSet::of(5, {v4}));
        CHECK(d.active.count() == 1);
        CHECK(d.succ[v4] == std::vector<VertexId>{v4});
    }
}

TEST_CASE("sccs of the co-buchi pair in order of smallest vertex")
{
    const Game g = cobuchi_pair();
    const auto sccs = strongly_connected_components(to_digraph(g.graph), VertexSet(6, true));
    REQUIRE(sccs.size() == 4);
    CHECK(sccs[0].size() == 3); // v0 v1 v3
    CHECK(sccs[1] == std::vector<VertexId>{vx(g.graph, "v2")});
}

TEST_CASE("lasso helpers")
{
    const Game g = cobuchi_pair();
    const GameGraph& G = g.graph;
    Lasso l{{vx(G, "v0"), vx(G, "v1")}, {vx(G, "v5")}};
    CHECK(is_valid_lasso(G, l));
    CHECK(l.loop_edges() == edges(G, {{"v5", "v5"}}));
    CHECK(l.occurring_edges() == edges(G, {{"v0", "v1"}, {"v1", "v5"}, {"v5", "v5"}}));
    CHECK_FALSE(is_valid_lasso(G, Lasso{{vx(G, "v0")}, {vx(G, "v2")}}));
}

TEST_CASE("serialize/parse round trip")
{
    for (const Game& g : {buchi_pair(), cobuchi_pair()}) CHECK(parse_game(serialize_game(g)) == g);
    std::mt19937_64 rng(7);
    for (int n = 0; n < 50; ++n) {
        const Game g = random_game(rng);
        CHECK(parse_game(serialize_game(g)) == g);
    }
}
