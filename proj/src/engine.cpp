/*
 * Copyright 2026 The gwse Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "gwse/engine.hpp"

#include <algorithm>

#include "gwse/assumption.hpp"
#include "gwse/errors.hpp"

namespace gwse {

namespace {

void require_edges(const GameGraph& g, const EdgeSet& edges, PlayerId i, bool own, const char* what)
{
    for (const Edge& e : edges) {
        if (!g.has_edge(e)) throw ContractViolation(std::string(what) + " edge is not an edge of the game");
        if (g.owned_by(e.from, i) != own)
            throw ContractViolation(std::string(what) + " edge (" + g.id(e.from) + "," + g.id(e.to) + ") " +
                                    (own ? "is not" : "is") + " owned by player " + std::to_string(i.value()));
    }
}

} // namespace

WinArena build_win_arena(const GameGraph& g, const UcaTemplate& own, const AggregateUca& others,
                         const ParitySpec& spec, PlayerId i)
{
    require_edges(g, own.unsafe, i, true, "own unsafe");
    require_edges(g, own.colive, i, true, "own colive");
    require_edges(g, others.unsafe, i, false, "unsafe");
    require_edges(g, others.colive, i, false, "colive");

    using Kind = WinArena::Kind;
    const std::size_t n = g.vertex_count();
    const int top_even = even_ceiling(spec.max_priority());

    WinArena a;
    a.original_vertices = n;
    std::vector<std::vector<VertexId>> succ(2 * n);
    std::vector<int> prio(2 * n, 0);
    for (VertexId v = 0; v < n; ++v) {
        a.kind.push_back(Kind::original);
        a.base.push_back(v);
        a.edge.push_back(std::nullopt);
        a.copy.push_back(0);
        prio[v] = spec.priority[v];
    }
    for (VertexId v = 0; v < n; ++v) {
        a.kind.push_back(Kind::hat);
        a.base.push_back(v);
        a.edge.push_back(std::nullopt);
        a.copy.push_back(1);
    }
    auto add = [&](Kind k, const Edge& e, int copy, int priority, VertexId target) {
        const VertexId m = a.kind.size();
        a.kind.push_back(k);
        a.base.push_back(e.from);
        a.edge.push_back(e);
        a.copy.push_back(copy);
        prio.push_back(priority);
        succ.push_back({target});
        return m;
    };

    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v : g.successors(u)) {
            const Edge e{u, v};
            if (own.unsafe.contains(e)) continue;
            if (own.colive.contains(e)) {
                const VertexId mid = add(Kind::own_colive, e, 0, top_even + 1, v);
                succ[u].push_back(mid);
            } else if (others.unsafe.contains(e)) {
                const VertexId mid = add(Kind::jump, e, 0, 0, a.hat(v));
                succ[u].push_back(mid);
            } else if (others.colive.contains(e)) {
                const VertexId mid = add(Kind::other_colive, e, 0, top_even, v);
                succ[u].push_back(mid);
            } else {
                succ[u].push_back(v);
            }
        }
    }
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v : g.successors(u)) {
            const Edge e{u, v};
            if (own.unsafe.contains(e)) continue;
            if (own.colive.contains(e)) {
                const VertexId mid = add(Kind::own_colive, e, 1, top_even + 1, a.hat(v));
                succ[a.hat(u)].push_back(mid);
            } else {
                succ[a.hat(u)].push_back(a.hat(v));
            }
        }
    }

    const std::size_t total = a.kind.size();
    a.view.graph.succ = std::move(succ);
    a.view.graph.active = VertexSet(total, true);
    a.view.protagonist = VertexSet(total);
    for (VertexId v = 0; v < n; ++v)
        if (g.owned_by(v, i)) {
            a.view.protagonist.insert(v);
            a.view.protagonist.insert(a.hat(v));
        }
    a.priority.priority = std::move(prio);
    return a;
}

VertexSet compute_win(const GameGraph& g, const UcaTemplate& own, const AggregateUca& others,
                      const ParitySpec& spec, PlayerId i)
{
    const WinArena a = build_win_arena(g, own, others, spec, i);
    const SolveResult r = solve_parity(a.view, a.priority);
    VertexSet out(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (r.win_protagonist.contains(v)) out.insert(v);
    return out;
}

SpecProfile profile_of(const Game& game, AssumptionProfile templates)
{
    if (templates.size() != static_cast<std::size_t>(game.players()))
        throw ContractViolation("profile has " + std::to_string(templates.size()) + " templates for " +
                                std::to_string(game.players()) + " players");
    return SpecProfile{std::move(templates), game.specs};
}

SynthesisResult o_compute_ge(const Game& game)
{
    const GameGraph& g = game.graph;
    const int k = game.players();
    SynthesisResult result;
    result.trace.bound = 2 * static_cast<std::size_t>(k) * g.edge_count();

    AssumptionProfile current = true_profile(k);
    for (std::size_t iteration = 0; iteration < result.trace.bound; ++iteration) {
        TraceIteration step;
        step.before = current;
        bool all_win = true;
        for (int p = 1; p <= k; ++p) {
            const PlayerId i(p);
            const VertexSet win =
                compute_win(g, current[i.index()], assumption_of_others(current, i), game.spec(i), i);
            step.initial_wins.push_back(win.contains(g.initial()));
            all_win = all_win && step.initial_wins.back();
        }
        if (all_win) {
            step.after = current;
            result.trace.iterations.push_back(std::move(step));
            result.profile = profile_of(game, current);
            return result;
        }

        AssumptionProfile next;
        for (int p = 1; p <= k; ++p) {
            const PlayerId i(p);
            auto extra = compute_uca(g, assumption_of_others(current, i), game.spec(i), i, g.initial());
            if (!extra) {
                step.no_assumption = i;
                break;
            }
            next.push_back(conjoin(current[i.index()], *extra));
        }
        if (step.no_assumption) {
            step.after = current;
            result.trace.iterations.push_back(std::move(step));
            return result;
        }
        step.after = next;
        const bool changed = next != current;
        result.trace.iterations.push_back(std::move(step));
        if (!changed) return result;
        current = std::move(next);
    }
    return result;
}

FiniteMemoryStrategy memoryless(const GameGraph& g, PlayerId i, const std::vector<std::optional<VertexId>>& choice)
{
    FiniteMemoryStrategy s;
    s.player = i;
    s.memory_size = 1;
    s.move.assign(1, std::vector<std::optional<VertexId>>(g.vertex_count()));
    s.update.assign(1, std::vector<std::size_t>(g.edge_count(), 0));
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.owned_by(v, i)) s.move[0][v] = v < choice.size() && choice[v] ? choice[v] : g.successors(v).front();
    return s;
}

FiniteMemoryStrategy extract_strategy(const Game& game, const SpecProfile& profile, PlayerId i)
{
    const GameGraph& g = game.graph;
    const UcaTemplate& own = profile.own(i);
    const AggregateUca others = profile.others(i);
    const WinArena a = build_win_arena(g, own, others, profile.spec(i), i);
    const SolveResult r = solve_parity(a.view, a.priority);
    if (!r.win_protagonist.contains(g.initial()))
        throw ContractViolation("extract_strategy: player " + std::to_string(i.value()) +
                                " does not win from the initial vertex");

    const std::size_t n = g.vertex_count();
    FiniteMemoryStrategy s;
    s.player = i;
    s.memory_size = others.unsafe.empty() ? 1 : 2;
    s.move.assign(s.memory_size, std::vector<std::optional<VertexId>>(n));
    s.update.assign(s.memory_size, std::vector<std::size_t>(g.edge_count(), 0));

    auto fallback = [&](VertexId v) {
        for (VertexId w : g.successors(v))
            if (!own.unsafe.contains({v, w})) return w;
        return g.successors(v).front();
    };
    for (std::size_t m = 0; m < s.memory_size; ++m) {
        for (VertexId v = 0; v < n; ++v) {
            if (!g.owned_by(v, i)) continue;
            const VertexId at = m == 0 ? v : a.hat(v);
            const auto& choice = r.strategy_protagonist[at];
            if (!r.win_protagonist.contains(at) || !choice) {
                s.move[m][v] = fallback(v);
                continue;
            }
            const VertexId w = *choice;
            s.move[m][v] = a.edge[w] ? a.edge[w]->to : a.base[w];
        }
        for (std::size_t e = 0; e < g.edge_count(); ++e)
            s.update[m][e] = (m == 0 && others.unsafe.contains(g.edges()[e]) && s.memory_size == 2) ? 1 : m;
    }
    return s;
}

Game with_environment(const Game& game, const std::vector<VertexId>& env_vertices)
{
    const GameGraph& g = game.graph;
    const int env = g.players() + 1;
    std::vector<int> owners = g.owners();
    VertexSet seen(g.vertex_count());
    for (VertexId v : env_vertices) {
        if (v >= g.vertex_count()) throw ContractViolation("environment vertex " + std::to_string(v) + " is not a vertex");
        if (seen.contains(v)) throw ContractViolation("environment vertex " + g.id(v) + " listed twice");
        seen.insert(v);
        owners[v] = env;
    }
    Game out{GameGraph(env, g.ids(), std::move(owners), g.edges(), g.initial()), game.specs};
    out.specs.push_back(ParitySpec::constant(g.vertex_count(), 0));
    return out;
}

Game coalition_game(const Game& game, const std::vector<PlayerId>& members)
{
    if (members.empty()) throw ContractViolation("coalition_game: empty coalition");
    std::vector<bool> in(static_cast<std::size_t>(game.players()), false);
    for (PlayerId p : members) {
        if (p.value() < 1 || p.value() > game.players())
            throw ContractViolation("coalition member " + std::to_string(p.value()) + " is not a player");
        in[p.index()] = true;
    }
    Game out = game;
    for (std::size_t p = 0; p < in.size(); ++p)
        if (!in[p]) out.specs[p] = ParitySpec::constant(game.graph.vertex_count(), 0);
    return out;
}

} // namespace gwse
