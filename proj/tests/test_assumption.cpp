#include <doctest.h>

#include "gwse/assumption.hpp"
#include "gwse/errors.hpp"
#include "gwse/formula.hpp"
#include "gwse/oracle.hpp"
#include "gwse/parity.hpp"
#include "support/fixtures.hpp"

using namespace gwse;
using namespace gwse::testing;

TEST_CASE("parity ceilings")
{
    CHECK(odd_ceiling(0) == 1);
    CHECK(odd_ceiling(3) == 3);
    CHECK(odd_ceiling(4) == 5);
    CHECK(even_ceiling(3) == 4);
    CHECK(even_ceiling(2) == 2);
}

TEST_CASE("assumption arena with empty aggregate is the plain two-player view")
{
    const Game g = cobuchi_pair();
    const AssumptionArena a = build_assumption_arena(g.graph, {}, g.spec(PlayerId(2)), PlayerId(2));
    const TwoPlayerView plain = TwoPlayerView::of(g.graph, PlayerId(2));
    CHECK(a.view.graph.succ == plain.graph.succ);
    CHECK(a.view.protagonist == plain.protagonist);
    CHECK(a.priority == g.spec(PlayerId(2)));
}

TEST_CASE("assumption arena for the co-buchi pair player 2 under player 1's template")
{
    const Game g = cobuchi_pair();
    const GameGraph& G = g.graph;
    const AggregateUca others{edges(G, {{"v1", "v2"}, {"v3", "v4"}}), edges(G, {{"v1", "v0"}})};
    const AssumptionArena a = build_assumption_arena(G, others, g.spec(PlayerId(2)), PlayerId(2));
    REQUIRE(a.view.graph.size() == 7);
    const VertexId mid = 6;
    CHECK(a.is_middle(mid));
    CHECK(a.middle_of[mid] == ed(G, "v1", "v0"));
    CHECK(a.priority.priority[mid] == odd_ceiling(g.spec(PlayerId(2)).max_priority()));
    const auto& s1 = a.view.graph.succ[vx(G, "v1")];
    CHECK(std::find(s1.begin(), s1.end(), vx(G, "v2")) == s1.end());
    CHECK(std::find(s1.begin(), s1.end(), mid) != s1.end());
    CHECK(std::find(s1.begin(), s1.end(), vx(G, "v0")) == s1.end());
    CHECK(a.view.graph.succ[mid] == std::vector<VertexId>{vx(G, "v0")});
    const auto& s3 = a.view.graph.succ[vx(G, "v3")];
    CHECK(std::find(s3.begin(), s3.end(), vx(G, "v4")) == s3.end());
}

TEST_CASE("assumption arena rejects the protagonist's own edges")
{
    const Game g = cobuchi_pair();
    const AggregateUca bad{edges(g.graph, {{"v0", "v0"}}), {}};
    CHECK_THROWS_AS(build_assumption_arena(g.graph, bad, g.spec(PlayerId(2)), PlayerId(2)), ContractViolation);
}

TEST_CASE("approx_apa on the worked examples")
{
    const Game g2 = cobuchi_pair();
    const GameGraph& G2 = g2.graph;
    auto a1 = approx_apa(G2, g2.spec(PlayerId(1)), PlayerId(1), G2.initial());
    REQUIRE(a1);
    CHECK(a1->unsafe == edges(G2, {{"v1", "v2"}, {"v3", "v4"}}));
    CHECK(a1->colive == edges(G2, {{"v1", "v0"}}));
    auto a2 = approx_apa(G2, g2.spec(PlayerId(2)), PlayerId(2), G2.initial());
    REQUIRE(a2);
    CHECK(a2->unsafe.empty());
    CHECK(a2->colive == edges(G2, {{"v0", "v0"}}));

    const Game g1 = buchi_pair();
    auto b1 = approx_apa(g1.graph, g1.spec(PlayerId(1)), PlayerId(1), g1.graph.initial());
    REQUIRE(b1);
    CHECK(b1->unsafe == edges(g1.graph, {{"v3", "v4"}}));
    CHECK(b1->colive.empty());
}

TEST_CASE("compute_uca on the worked examples")
{
    const Game g = cobuchi_pair();
    const GameGraph& G = g.graph;
    const UcaTemplate psi1(PlayerId(1), edges(G, {{"v1", "v2"}, {"v3", "v4"}}), edges(G, {{"v1", "v0"}}));
    const UcaTemplate psi2(PlayerId(2), {}, edges(G, {{"v0", "v0"}}));
    auto u2 = compute_uca(G, aggregate(psi1), g.spec(PlayerId(2)), PlayerId(2), G.initial());
    REQUIRE(u2);
    CHECK(u2->unsafe.empty());
    CHECK(u2->colive == edges(G, {{"v0", "v0"}, {"v0", "v3"}}));
    auto u1 = compute_uca(G, aggregate(psi2), g.spec(PlayerId(1)), PlayerId(1), G.initial());
    REQUIRE(u1);
    CHECK(uca_equal(*u1, psi1));
}

TEST_CASE("no assumption when init is outside the cooperative region")
{
    const Game g = cobuchi_pair();
    CHECK_FALSE(approx_apa(g.graph, g.spec(PlayerId(1)), PlayerId(1), vx(g.graph, "v2")).has_value());
    CHECK_FALSE(compute_uca(g.graph, {}, g.spec(PlayerId(1)), PlayerId(1), vx(g.graph, "v4")).has_value());
}

TEST_CASE("approx_apa is permissive, satisfiable and implementable on random games")
{
    std::mt19937_64 rng(2024);
    int checked = 0;
    for (int n = 0; n < 300; ++n) {
        const Game g = random_game(rng);
        const PlayerId i(1);
        const auto t = approx_apa(g.graph, g.spec(i), i, g.graph.initial());
        const bool coop = cooperative_region(to_digraph(g.graph), g.spec(i)).contains(g.graph.initial());
        CHECK(t.has_value() == coop);
        if (!t) continue;
        ++checked;
        const LabeledGraph plain = plain_graph(g.graph);
        const FormulaPtr phi = formula::parity(g.spec(i));
        const FormulaPtr psi = formula::uca(*t);
        INFO(serialize_game(g));
        // every play meeting phi respects psi
        CHECK_FALSE(find_lasso(plain, *formula::conj({phi, formula::neg(psi)})).has_value());
        // cooperation can still meet both
        CHECK(find_lasso(plain, *formula::conj({phi, psi})).has_value());
        // player i can keep psi on their own
        const EnumeratedWin w = winner_by_enumeration(g.graph, *t, {}, ParitySpec::constant(g.graph.vertex_count(), 0), i);
        CHECK(w.fresh.contains(g.graph.initial()));
        for (const Edge& e : t->unsafe) CHECK(g.graph.owned_by(e.from, i));
        for (const Edge& e : t->colive) CHECK(g.graph.owned_by(e.from, i));
    }
    CHECK(checked > 50);
}
