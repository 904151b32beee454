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

#ifndef GWSE_ENGINE_HPP
#define GWSE_ENGINE_HPP

#include <optional>
#include <vector>

#include "gwse/game.hpp"
#include "gwse/parity.hpp"
#include "gwse/uca.hpp"

namespace gwse {

/**
 * The synthesized specification of every player: player i must satisfy
 * psi_i & (psi_{-i} -> phi_i), with psi taken from `templates`.
 */
struct SpecProfile
{
    AssumptionProfile templates;
    std::vector<ParitySpec> specs;

    int players() const { return static_cast<int>(templates.size()); }
    const UcaTemplate& own(PlayerId i) const { return templates[i.index()]; }
    AggregateUca others(PlayerId i) const { return assumption_of_others(templates, i); }
    const ParitySpec& spec(PlayerId i) const { return specs[i.index()]; }

    bool operator==(const SpecProfile&) const = default;
};

/**
 * Two-copy arena deciding psi_i & (psi_{-i} -> phi_i) as a parity game.
 *
 * Copy 1 holds V (indices [0, n)) and still trusts the others: their colive
 * edges pass a middle vertex of priority 2d (seeing one forever wins), and
 * taking one of their unsafe edges jumps into copy 2 (indices [n, 2n), the
 * hats), where only psi_i remains to be met. Own colive edges pass a
 * 2d+1 middle vertex in both copies; own unsafe edges are gone.
 */
struct WinArena
{
    enum class Kind { original, hat, own_colive, other_colive, jump };

    TwoPlayerView view;
    ParitySpec priority;
    std::size_t original_vertices = 0;
    std::vector<Kind> kind;
    std::vector<VertexId> base;             // G-vertex of original/hat vertices, edge source otherwise
    std::vector<std::optional<Edge>> edge;  // G-edge represented by an added vertex
    std::vector<int> copy;                  // 0 for copy 1 (including jumps), 1 for copy 2

    VertexId hat(VertexId v) const { return original_vertices + v; }
};

WinArena build_win_arena(const GameGraph& g, const UcaTemplate& own, const AggregateUca& others,
                         const ParitySpec& spec, PlayerId i);

/// Vertices of g from which player i wins psi_i & (psi_{-i} -> phi_i) against everybody else.
VertexSet compute_win(const GameGraph& g, const UcaTemplate& own, const AggregateUca& others,
                      const ParitySpec& spec, PlayerId i);

struct TraceIteration
{
    AssumptionProfile before;
    AssumptionProfile after;           // equals `before` on the final iteration
    std::vector<bool> initial_wins;    // per player: v0 in compute_win
    std::optional<PlayerId> no_assumption; // player whose compute_uca found nothing
};

struct SynthesisTrace
{
    std::vector<TraceIteration> iterations;
    std::size_t bound = 0; // 2k|E|
};

struct SynthesisResult
{
    std::optional<SpecProfile> profile; // nullopt means False
    SynthesisTrace trace;
};

/**
 * Iterative synthesis from all-True templates. Each iteration checks
 * whether v0 is won by every player for their current psi_i & (psi_{-i} -> phi_i);
 * otherwise every psi_i is strengthened with compute_uca under psi_{-i}.
 * False when some compute_uca has no answer or nothing changed.
 */
SynthesisResult o_compute_ge(const Game& game);

SpecProfile profile_of(const Game& game, AssumptionProfile templates);

/**
 * Mealy strategy: memory state m, vertex v owned by `player` gives
 * move[m][v]; taking edge number e (document order) moves memory to
 * update[m][e].
 */
struct FiniteMemoryStrategy
{
    PlayerId player;
    std::size_t memory_size = 1;
    std::size_t initial = 0;
    std::vector<std::vector<std::optional<VertexId>>> move;
    std::vector<std::vector<std::size_t>> update;

    bool operator==(const FiniteMemoryStrategy&) const = default;
};

/// Positional strategy of one player as a one-state FiniteMemoryStrategy.
FiniteMemoryStrategy memoryless(const GameGraph& g, PlayerId i, const std::vector<std::optional<VertexId>>& choice);

/**
 * Winning strategy for psi_i & (psi_{-i} -> phi_i) pulled back from the
 * win arena; memory records whether somebody else broke psi_{-i}'s unsafe part.
 * Throws ContractViolation when v0 is not winning.
 */
FiniteMemoryStrategy extract_strategy(const Game& game, const SpecProfile& profile, PlayerId i);

/// Adds player k+1 owning env_vertices, with the trivially true objective.
Game with_environment(const Game& game, const std::vector<VertexId>& env_vertices);

/// Replaces the objectives of non-members with True.
Game coalition_game(const Game& game, const std::vector<PlayerId>& members);

} // namespace gwse

#endif
