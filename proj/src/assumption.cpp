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

#include "gwse/assumption.hpp"

#include "gwse/errors.hpp"

namespace gwse {

int odd_ceiling(int p)
{
    return p % 2 == 1 ? p : p + 1;
}

int even_ceiling(int p)
{
    return p % 2 == 0 ? p : p + 1;
}

namespace {

void require_foreign_edges(const GameGraph& g, const EdgeSet& edges, PlayerId i, const char* what)
{
    for (const Edge& e : edges) {
        if (!g.has_edge(e))
            throw ContractViolation(std::string(what) + " edge is not an edge of the game");
        if (g.owned_by(e.from, i))
            throw ContractViolation(std::string(what) + " edge (" + g.id(e.from) + "," + g.id(e.to) +
                                    ") is owned by player " + std::to_string(i.value()));
    }
}

} // namespace

AssumptionArena build_assumption_arena(const GameGraph& g, const AggregateUca& others, const ParitySpec& spec,
                                       PlayerId i)
{
    require_foreign_edges(g, others.unsafe, i, "unsafe");
    require_foreign_edges(g, others.colive, i, "colive");

    const std::size_t n = g.vertex_count();
    AssumptionArena arena;
    arena.original_vertices = n;

    std::vector<Edge> middles;
    for (const Edge& e : g.edges())
        if (others.colive.contains(e) && !others.unsafe.contains(e)) middles.push_back(e);
    const std::size_t total = n + middles.size();

    arena.middle_of.assign(total, std::nullopt);
    arena.view.graph.succ.assign(total, {});
    arena.view.graph.active = VertexSet(total, true);
    arena.view.protagonist = VertexSet(total);
    for (VertexId v = 0; v < n; ++v)
        if (g.owned_by(v, i)) arena.view.protagonist.insert(v);

    std::vector<VertexId> middle_vertex(g.edge_count(), 0);
    for (std::size_t m = 0; m < middles.size(); ++m) {
        arena.middle_of[n + m] = middles[m];
        middle_vertex[*g.edge_index(middles[m])] = n + m;
    }

    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v : g.successors(u)) {
            const Edge e{u, v};
            if (g.owned_by(u, i)) {
                arena.view.graph.succ[u].push_back(v);
            } else if (others.unsafe.contains(e)) {
                continue;
            } else if (others.colive.contains(e)) {
                const VertexId m = middle_vertex[*g.edge_index(e)];
                arena.view.graph.succ[u].push_back(m);
                arena.view.graph.succ[m].push_back(v);
            } else {
                arena.view.graph.succ[u].push_back(v);
            }
        }
    }

    const int top = odd_ceiling(spec.max_priority());
    arena.priority.priority.assign(total, top);
    for (VertexId v = 0; v < n; ++v) arena.priority.priority[v] = spec.priority[v];
    return arena;
}

std::optional<UcaTemplate> approx_apa(const TwoPlayerView& view, const ParitySpec& spec, PlayerId i, VertexId init)
{
    const Digraph& g = view.graph;
    const VertexSet good = recurrent_vertices(g, spec);
    const VertexSet coop = backward_reachable(g, good);
    if (!coop.contains(init)) return std::nullopt;

    const Digraph inside = induced_subgraph(g, coop);
    const auto rank = distance_to(inside, good);

    UcaTemplate out(i);
    for (VertexId u : (g.active & view.protagonist).members()) {
        if (!coop.contains(u)) continue;
        for (VertexId v : g.succ[u]) {
            if (!coop.contains(v)) {
                out.unsafe.insert({u, v});
            } else if (*rank[u] > 0 && *rank[v] >= *rank[u]) {
                out.colive.insert({u, v});
            }
        }
    }
    return out;
}

std::optional<UcaTemplate> approx_apa(const GameGraph& g, const ParitySpec& spec, PlayerId i, VertexId init)
{
    return approx_apa(TwoPlayerView::of(g, i), spec, i, init);
}

std::optional<UcaTemplate> compute_uca(const GameGraph& g, const AggregateUca& others, const ParitySpec& spec,
                                       PlayerId i, VertexId init)
{
    const AssumptionArena arena = build_assumption_arena(g, others, spec, i);
    // Protagonist edges of the arena are exactly player i's edges of g.
    return approx_apa(arena.view, arena.priority, i, init);
}

} // namespace gwse
