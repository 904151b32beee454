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

#ifndef GWSE_PARITY_HPP
#define GWSE_PARITY_HPP

#include <optional>
#include <vector>

#include "gwse/game.hpp"

namespace gwse {

/**
 * Zero-sum view of a k-player game: the protagonist moves at
 * `protagonist` vertices, everybody else is lumped into one adversary.
 */
struct TwoPlayerView
{
    Digraph graph;
    VertexSet protagonist;

    static TwoPlayerView of(const GameGraph& g, PlayerId p);
    static TwoPlayerView of(Digraph graph, VertexSet protagonist);
};

enum class Side { protagonist, adversary };

inline Side opponent(Side s) { return s == Side::protagonist ? Side::adversary : Side::protagonist; }

/// Memoryless partial strategy, indexed by vertex.
using PositionalStrategy = std::vector<std::optional<VertexId>>;

struct AttractorResult
{
    VertexSet region;
    PositionalStrategy strategy; // set on `side`'s vertices that joined the region (not on the target)
};

/**
 * Attractor of `side` to `target` inside the active vertices of `view`
 * (optionally further restricted to `within`). Vertices of `side` join once
 * some successor is in the region, others once all successors are. The
 * strategy picks the first successor in canonical order already in the
 * region at join time.
 */
AttractorResult attractor(const TwoPlayerView& view, const VertexSet& target, Side side = Side::protagonist);
AttractorResult attractor(const TwoPlayerView& view, const VertexSet& target, Side side, const VertexSet& within);

struct SolveResult
{
    VertexSet win_protagonist;
    VertexSet win_adversary;
    PositionalStrategy strategy_protagonist;
    PositionalStrategy strategy_adversary;
};

/// Zielonka's recursive algorithm. Requires every active vertex to have a successor.
SolveResult solve_zielonka(const TwoPlayerView& view, const ParitySpec& priority);

/**
 * Parity solving on views that may contain sinks: a player stuck at a sink
 * loses. Removes both sides' dead-end attractors, then runs Zielonka.
 */
SolveResult solve_parity(const TwoPlayerView& view, const ParitySpec& priority);

/**
 * Vertices lying in a good recurrence component: for some even p, an SCC
 * (with an internal edge) of the subgraph of priorities <= p that contains
 * a priority-p vertex.
 */
VertexSet recurrent_vertices(const Digraph& g, const ParitySpec& priority);

/// Vertices from which some play satisfies the parity objective.
VertexSet cooperative_region(const Digraph& g, const ParitySpec& priority);

/// True iff e lies on a strongly connected edge set whose maximal priority is even.
bool edge_can_recur(const Digraph& g, const ParitySpec& priority, const Edge& e);

/// Backward reachability to `target` inside the view.
VertexSet backward_reachable(const Digraph& g, const VertexSet& target);

/// Shortest distance to `target` inside the view, or nullopt when unreachable.
std::vector<std::optional<std::size_t>> distance_to(const Digraph& g, const VertexSet& target);

} // namespace gwse

#endif
