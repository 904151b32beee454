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

#include "gwse/parity.hpp"

#include <algorithm>
#include <deque>

#include "gwse/errors.hpp"

namespace gwse {

TwoPlayerView TwoPlayerView::of(const GameGraph& g, PlayerId p)
{
    return TwoPlayerView{to_digraph(g), g.vertices_of(p)};
}

TwoPlayerView TwoPlayerView::of(Digraph graph, VertexSet protagonist)
{
    return TwoPlayerView{std::move(graph), std::move(protagonist)};
}

namespace {

bool belongs(const TwoPlayerView& view, VertexId v, Side side)
{
    return view.protagonist.contains(v) == (side == Side::protagonist);
}

} // namespace

AttractorResult attractor(const TwoPlayerView& view, const VertexSet& target, Side side, const VertexSet& within)
{
    const Digraph& g = view.graph;
    const std::size_t n = g.size();
    const VertexSet scope = g.active & within;

    AttractorResult result{VertexSet(n), PositionalStrategy(n)};
    std::vector<std::size_t> remaining(n, 0);
    std::vector<std::vector<VertexId>> pred(n);
    for (VertexId u = 0; u < n; ++u) {
        if (!scope.contains(u)) continue;
        for (VertexId v : g.succ[u])
            if (scope.contains(v)) {
                ++remaining[u];
                pred[v].push_back(u);
            }
    }

    std::deque<VertexId> queue;
    for (VertexId v = 0; v < n; ++v)
        if (scope.contains(v) && target.contains(v)) {
            result.region.insert(v);
            queue.push_back(v);
        }

    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (VertexId u : pred[v]) {
            if (result.region.contains(u)) continue;
            bool joins = false;
            if (belongs(view, u, side)) {
                joins = true;
            } else {
                joins = --remaining[u] == 0;
            }
            if (!joins) continue;
            result.region.insert(u);
            if (belongs(view, u, side)) {
                for (VertexId w : g.succ[u])
                    if (scope.contains(w) && result.region.contains(w)) {
                        result.strategy[u] = w;
                        break;
                    }
            }
            queue.push_back(u);
        }
    }
    return result;
}

AttractorResult attractor(const TwoPlayerView& view, const VertexSet& target, Side side)
{
    return attractor(view, target, side, VertexSet(view.graph.size(), true));
}

namespace {

class Zielonka
{
public:
    Zielonka(const TwoPlayerView& view, const ParitySpec& priority) : view_(view), priority_(priority) {}

    SolveResult solve(const VertexSet& game)
    {
        const std::size_t n = view_.graph.size();
        SolveResult out{VertexSet(n), VertexSet(n), PositionalStrategy(n), PositionalStrategy(n)};
        if (game.empty()) return out;

        int top = -1;
        for (VertexId v : game.members()) top = std::max(top, priority_.priority[v]);
        const Side alpha = (top % 2 == 0) ? Side::protagonist : Side::adversary;

        VertexSet top_vertices(n);
        for (VertexId v : game.members())
            if (priority_.priority[v] == top) top_vertices.insert(v);

        AttractorResult attr = attractor(view_, top_vertices, alpha, game);
        SolveResult sub = solve(game - attr.region);

        VertexSet& sub_win_opp = region(sub, opponent(alpha));
        if (sub_win_opp.empty()) {
            region(out, alpha) = game;
            PositionalStrategy& strat = strategy(out, alpha);
            const PositionalStrategy& sub_strat = strategy(sub, alpha);
            for (VertexId v : game.members()) {
                if (!belongs(view_, v, alpha)) continue;
                if (attr.region.contains(v)) {
                    if (attr.strategy[v]) {
                        strat[v] = attr.strategy[v];
                    } else {
                        // Top-priority vertex: any move that stays in the subgame.
                        for (VertexId w : view_.graph.succ[v])
                            if (game.contains(w)) {
                                strat[v] = w;
                                break;
                            }
                    }
                } else {
                    strat[v] = sub_strat[v];
                }
            }
            return out;
        }

        const Side beta = opponent(alpha);
        AttractorResult battr = attractor(view_, sub_win_opp, beta, game);
        SolveResult rest = solve(game - battr.region);

        region(out, alpha) = region(rest, alpha);
        region(out, beta) = region(rest, beta) | battr.region;
        strategy(out, alpha) = strategy(rest, alpha);
        PositionalStrategy& bstrat = strategy(out, beta);
        bstrat = strategy(rest, beta);
        const PositionalStrategy& sub_beta = strategy(sub, beta);
        for (VertexId v : battr.region.members()) {
            if (!belongs(view_, v, beta)) continue;
            bstrat[v] = sub_win_opp.contains(v) ? sub_beta[v] : battr.strategy[v];
        }
        return out;
    }

private:
    static VertexSet& region(SolveResult& r, Side s)
    {
        return s == Side::protagonist ? r.win_protagonist : r.win_adversary;
    }
    static PositionalStrategy& strategy(SolveResult& r, Side s)
    {
        return s == Side::protagonist ? r.strategy_protagonist : r.strategy_adversary;
    }

    const TwoPlayerView& view_;
    const ParitySpec& priority_;
};

} // namespace

SolveResult solve_zielonka(const TwoPlayerView& view, const ParitySpec& priority)
{
    const Digraph& g = view.graph;
    if (priority.priority.size() < g.size()) throw ContractViolation("priority function does not cover the view");
    for (VertexId v : g.active.members())
        if (g.succ[v].empty())
            throw ContractViolation("solve_zielonka: vertex " + std::to_string(v) + " has no outgoing edge");
    return Zielonka(view, priority).solve(g.active);
}

SolveResult solve_parity(const TwoPlayerView& view, const ParitySpec& priority)
{
    const Digraph& g = view.graph;
    const std::size_t n = g.size();
    VertexSet stuck_protagonist(n), stuck_adversary(n);
    for (VertexId v : g.active.members())
        if (g.succ[v].empty()) (view.protagonist.contains(v) ? stuck_protagonist : stuck_adversary).insert(v);

    SolveResult out{VertexSet(n), VertexSet(n), PositionalStrategy(n), PositionalStrategy(n)};
    if (stuck_protagonist.empty() && stuck_adversary.empty()) return solve_zielonka(view, priority);

    const VertexSet everything(n, true);
    AttractorResult lost = attractor(view, stuck_protagonist, Side::adversary, everything);
    const VertexSet rest1 = g.active - lost.region;
    AttractorResult won = attractor(view, stuck_adversary, Side::protagonist, rest1);
    const VertexSet rest2 = rest1 - won.region;

    TwoPlayerView sub{induced_subgraph(g, rest2), view.protagonist};
    SolveResult inner = Zielonka(sub, priority).solve(rest2);

    out.win_protagonist = inner.win_protagonist | won.region;
    out.win_adversary = inner.win_adversary | lost.region;
    out.strategy_protagonist = inner.strategy_protagonist;
    out.strategy_adversary = inner.strategy_adversary;
    for (VertexId v : won.region.members())
        if (won.strategy[v]) out.strategy_protagonist[v] = won.strategy[v];
    for (VertexId v : lost.region.members())
        if (lost.strategy[v]) out.strategy_adversary[v] = lost.strategy[v];
    return out;
}

VertexSet recurrent_vertices(const Digraph& g, const ParitySpec& priority)
{
    const std::size_t n = g.size();
    VertexSet out(n);
    int top = 0;
    for (VertexId v : g.active.members()) top = std::max(top, priority.priority[v]);
    for (int p = 0; p <= top; p += 2) {
        VertexSet low(n);
        for (VertexId v : g.active.members())
            if (priority.priority[v] <= p) low.insert(v);
        for (const auto& comp : strongly_connected_components(g, low)) {
            const bool has_top =
                std::any_of(comp.begin(), comp.end(), [&](VertexId v) { return priority.priority[v] == p; });
            const bool has_edge = comp.size() > 1 || g.has_edge(comp.front(), comp.front());
            if (has_top && has_edge)
                for (VertexId v : comp) out.insert(v);
        }
    }
    return out;
}

VertexSet backward_reachable(const Digraph& g, const VertexSet& target)
{
    const auto pred = g.predecessors();
    VertexSet seen = target & g.active;
    std::vector<VertexId> stack = seen.members();
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId u : pred[v])
            if (!seen.contains(u)) {
                seen.insert(u);
                stack.push_back(u);
            }
    }
    return seen;
}

std::vector<std::optional<std::size_t>> distance_to(const Digraph& g, const VertexSet& target)
{
    const auto pred = g.predecessors();
    std::vector<std::optional<std::size_t>> dist(g.size());
    std::deque<VertexId> queue;
    for (VertexId v : (target & g.active).members()) {
        dist[v] = 0;
        queue.push_back(v);
    }
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (VertexId u : pred[v])
            if (!dist[u]) {
                dist[u] = *dist[v] + 1;
                queue.push_back(u);
            }
    }
    return dist;
}

VertexSet cooperative_region(const Digraph& g, const ParitySpec& priority)
{
    return backward_reachable(g, recurrent_vertices(g, priority));
}

bool edge_can_recur(const Digraph& g, const ParitySpec& priority, const Edge& e)
{
    if (!g.active.contains(e.from) || !g.has_edge(e.from, e.to)) return false;
    int top = 0;
    for (VertexId v : g.active.members()) top = std::max(top, priority.priority[v]);
    const int floor = std::max(priority.priority[e.from], priority.priority[e.to]);
    for (int p = floor + (floor % 2); p <= top; p += 2) {
        VertexSet low(g.size());
        for (VertexId v : g.active.members())
            if (priority.priority[v] <= p) low.insert(v);
        for (const auto& comp : strongly_connected_components(g, low)) {
            if (!std::binary_search(comp.begin(), comp.end(), e.from)) continue;
            if (!std::binary_search(comp.begin(), comp.end(), e.to)) break;
            if (std::any_of(comp.begin(), comp.end(), [&](VertexId v) { return priority.priority[v] == p; }))
                return true;
            break;
        }
    }
    return false;
}

} // namespace gwse
