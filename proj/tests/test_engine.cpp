#include <doctest.h>

#include <algorithm>

#include "gwse/assumption.hpp"
#include "gwse/engine.hpp"
#include "gwse/errors.hpp"
#include "gwse/formula.hpp"
#include "gwse/oracle.hpp"
#include "support/fixtures.hpp"

using namespace gwse;
using namespace gwse::testing;

namespace {

struct CobuchiFinal
{
    Game game = cobuchi_pair();
    UcaTemplate psi1{PlayerId(1), edges(game.graph, {{"v1", "v2"}, {"v3", "v4"}}), edges(game.graph, {{"v1", "v0"}})};
    UcaTemplate psi2{PlayerId(2), {}, edges(game.graph, {{"v0", "v0"}, {"v0", "v3"}})};
};

std::size_t count_kind(const WinArena& a, WinArena::Kind k)
{
    return static_cast<std::size_t>(std::count(a.kind.begin(), a.kind.end(), k));
}

} // namespace

TEST_CASE("win arena with empty templates: second copy unreachable")
{
    const Game g = cobuchi_pair();
    const WinArena a = build_win_arena(g.graph, UcaTemplate(PlayerId(1)), {}, g.spec(PlayerId(1)), PlayerId(1));
    CHECK(count_kind(a, WinArena::Kind::jump) == 0);
    const VertexSet r = reachable_from(a.view.graph, g.graph.initial());
    for (VertexId v = 0; v < a.view.graph.size(); ++v)
        if (r.contains(v)) CHECK(a.copy[v] == 0);
}

TEST_CASE("win arena drops own unsafe edges in both copies")
{
    const Game g = cobuchi_pair();
    const Edge e = ed(g.graph, "v1", "v2");
    const WinArena a = build_win_arena(g.graph, UcaTemplate(PlayerId(1), {e}), {}, g.spec(PlayerId(1)), PlayerId(1));
    CHECK(a.view.graph.size() == 2 * g.graph.vertex_count());
    CHECK_FALSE(a.view.graph.has_edge(e.from, e.to));
    CHECK_FALSE(a.view.graph.has_edge(a.hat(e.from), a.hat(e.to)));
}

TEST_CASE("win arena for the co-buchi pair's final profile")
{
    const CobuchiFinal f;
    const WinArena a = build_win_arena(f.game.graph, f.psi1, aggregate(f.psi2), f.game.spec(PlayerId(1)), PlayerId(1));
    const int top = even_ceiling(f.game.spec(PlayerId(1)).max_priority());
    CHECK(count_kind(a, WinArena::Kind::other_colive) == 2);
    CHECK(count_kind(a, WinArena::Kind::own_colive) == 2);
    CHECK(count_kind(a, WinArena::Kind::jump) == 0);
    for (VertexId v = 0; v < a.kind.size(); ++v) {
        if (a.kind[v] == WinArena::Kind::other_colive) CHECK(a.priority.priority[v] == top);
        if (a.kind[v] == WinArena::Kind::own_colive) CHECK(a.priority.priority[v] == top + 1);
    }
}

TEST_CASE("win arena rejects misplaced template edges")
{
    const Game g = cobuchi_pair();
    const UcaTemplate wrong(PlayerId(1), edges(g.graph, {{"v0", "v0"}}));
    CHECK_THROWS_AS(build_win_arena(g.graph, wrong, {}, g.spec(PlayerId(1)), PlayerId(1)), ContractViolation);
}

TEST_CASE("compute_win")
{
    const Game one{GameGraph(2, {"a", "b"}, {1, 2}, {Edge{0, 1}, Edge{1, 0}, Edge{1, 1}}, 0),
                   {ParitySpec::constant(2, 2), ParitySpec::constant(2, 0)}};
    CHECK(compute_win(one.graph, UcaTemplate(PlayerId(1)), {}, one.specs[0], PlayerId(1)) == VertexSet(2, true));

    const CobuchiFinal f;
    const VertexId v0 = f.game.graph.initial();
    CHECK(compute_win(f.game.graph, f.psi1, aggregate(f.psi2), f.game.spec(PlayerId(1)), PlayerId(1)).contains(v0));
    const UcaTemplate psi2_it2(PlayerId(2), {}, edges(f.game.graph, {{"v0", "v0"}}));
    CHECK_FALSE(compute_win(f.game.graph, f.psi1, aggregate(psi2_it2), f.game.spec(PlayerId(1)), PlayerId(1)).contains(v0));
}

TEST_CASE("synthesis on the co-buchi pair follows the three iterations")
{
    const CobuchiFinal f;
    const SynthesisResult r = o_compute_ge(f.game);
    REQUIRE(r.profile);
    REQUIRE(r.trace.iterations.size() == 3);
    CHECK(r.trace.bound == 2 * 2 * 11);
    const auto& it1 = r.trace.iterations[0];
    CHECK(it1.initial_wins == std::vector<bool>{false, false});
    CHECK(it1.after[0] == f.psi1);
    CHECK(it1.after[1] == UcaTemplate(PlayerId(2), {}, edges(f.game.graph, {{"v0", "v0"}})));
    const auto& it2 = r.trace.iterations[1];
    CHECK(it2.initial_wins == std::vector<bool>{false, true});
    CHECK(it2.after[0] == f.psi1);
    CHECK(it2.after[1] == f.psi2);
    const auto& it3 = r.trace.iterations[2];
    CHECK(it3.initial_wins == std::vector<bool>{true, true});
    CHECK(it3.after == it3.before);
    CHECK(r.profile->templates == AssumptionProfile{f.psi1, f.psi2});
}

TEST_CASE("synthesis on the buchi pair")
{
    const Game g = buchi_pair();
    const SynthesisResult r = o_compute_ge(g);
    REQUIRE(r.profile);
    CHECK(r.profile->own(PlayerId(1)).unsafe == edges(g.graph, {{"v3", "v4"}}));
    CHECK(r.profile->own(PlayerId(2)).unsafe == edges(g.graph, {{"v2", "v4"}}));
    CHECK(verify_gwse(g, *r.profile).passed());
}

TEST_CASE("trivially realizable specs stop in the first iteration")
{
    const Game g{GameGraph(2, {"v"}, {1}, {Edge{0, 0}}, 0), {ParitySpec::constant(1, 0), ParitySpec::constant(1, 2)}};
    const SynthesisResult r = o_compute_ge(g);
    REQUIRE(r.profile);
    CHECK(r.trace.iterations.size() == 1);
    CHECK(r.profile->templates == true_profile(2));
}

TEST_CASE("synthesis answers False when an objective cannot be met at all")
{
    const Game g{GameGraph(2, {"v"}, {1}, {Edge{0, 0}}, 0), {ParitySpec::constant(1, 1), ParitySpec::constant(1, 0)}};
    const SynthesisResult r = o_compute_ge(g);
    CHECK_FALSE(r.profile);
    REQUIRE_FALSE(r.trace.iterations.empty());
    CHECK(r.trace.iterations.back().no_assumption == PlayerId(1));
}

TEST_CASE("extract_strategy")
{
    SUBCASE("trivially won: memoryless")
    {
        const Game g{GameGraph(1, {"a", "b"}, {1, 1}, {Edge{0, 1}, Edge{1, 0}}, 0), {ParitySpec::constant(2, 0)}};
        const FiniteMemoryStrategy s = extract_strategy(g, profile_of(g, true_profile(1)), PlayerId(1));
        CHECK(s.memory_size == 1);
        CHECK(s.move[0][0] == VertexId{1});
    }
    SUBCASE("co-buchi pair: player 1 goes v1->v5 and v3->v0")
    {
        const CobuchiFinal f;
        const SpecProfile p = profile_of(f.game, {f.psi1, f.psi2});
        const FiniteMemoryStrategy s = extract_strategy(f.game, p, PlayerId(1));
        const GameGraph& G = f.game.graph;
        for (std::size_t m = 0; m < s.memory_size; ++m) {
            CHECK(s.move[m][vx(G, "v1")] == vx(G, "v5"));
            CHECK(s.move[m][vx(G, "v3")] == vx(G, "v0"));
        }
        CHECK(strategy_wins(G, s, *formula::guarded(p.own(PlayerId(1)), p.others(PlayerId(1)), p.spec(PlayerId(1)))).wins);
    }
    SUBCASE("buchi pair: player 1 never takes v3->v4")
    {
        const Game g = buchi_pair();
        const SpecProfile p = profile_of(g, {UcaTemplate(PlayerId(1), edges(g.graph, {{"v3", "v4"}})),
                                             UcaTemplate(PlayerId(2), edges(g.graph, {{"v2", "v4"}}))});
        const FiniteMemoryStrategy s = extract_strategy(g, p, PlayerId(1));
        for (std::size_t m = 0; m < s.memory_size; ++m) CHECK(s.move[m][vx(g.graph, "v3")] != vx(g.graph, "v4"));
    }
    SUBCASE("precondition: v0 must be winning")
    {
        const Game g = cobuchi_pair();
        CHECK_THROWS_AS(extract_strategy(g, profile_of(g, true_profile(2)), PlayerId(1)), ContractViolation);
    }
}

TEST_CASE("with_environment and coalition_game")
{
    const Game g = buchi_pair();
    const Game e0 = with_environment(g, {});
    CHECK(e0.players() == 3);
    CHECK(e0.graph.owners() == g.graph.owners());

    const Game e = with_environment(g, {vx(g.graph, "v0")});
    CHECK(e.players() == 3);
    CHECK(e.graph.owner_value(vx(g.graph, "v0")) == 3);
    CHECK(e.spec(PlayerId(3)) == ParitySpec::constant(5, 0));
    CHECK(validate_game(e).empty());
    CHECK_THROWS_AS(with_environment(g, {0, 0}), ContractViolation);
    CHECK_THROWS_AS(with_environment(g, {42}), ContractViolation);

    CHECK(coalition_game(g, {PlayerId(1), PlayerId(2)}) == g);
    const Game c = coalition_game(g, {PlayerId(1)});
    CHECK(c.spec(PlayerId(1)) == g.spec(PlayerId(1)));
    CHECK(cooperative_region(to_digraph(c.graph), c.spec(PlayerId(2))) == VertexSet(5, true));
    CHECK_THROWS_AS(coalition_game(g, {}), ContractViolation);
}

TEST_CASE("coalition {1} on the buchi pair has no equilibrium specification")
{
    // Player 2's objective becomes True: player 2 owns v0 and v2 and can
    // always head for v4, ruining player 1 at no cost. No winning secure
    // equilibrium exists, so False is the only right answer.
    const Game g = coalition_game(buchi_pair(), {PlayerId(1)});
    CHECK_FALSE(o_compute_ge(g).profile);
    const SpecProfile candidate = profile_of(g, {UcaTemplate(PlayerId(1), edges(g.graph, {{"v3", "v4"}})),
                                                 UcaTemplate(PlayerId(2), edges(g.graph, {{"v2", "v4"}}))});
    const GwseReport r = verify_gwse(g, candidate);
    CHECK(r.general);
    CHECK_FALSE(r.security.secure);
    CHECK(r.security.deviator == PlayerId(2));
}
