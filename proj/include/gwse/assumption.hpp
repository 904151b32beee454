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

#ifndef GWSE_ASSUMPTION_HPP
#define GWSE_ASSUMPTION_HPP

#include <optional>
#include <vector>

#include "gwse/game.hpp"
#include "gwse/parity.hpp"
#include "gwse/uca.hpp"

namespace gwse {

/// Smallest odd number >= p (top priority of the assumption arena).
int odd_ceiling(int p);
/// Smallest even number >= p (top priority of the winning-check arena).
int even_ceiling(int p);

/**
 * Two-player arena in which "others' template and parity" becomes a plain
 * parity objective: others' unsafe edges are removed and each of their
 * colive edges is routed through a fresh middle vertex carrying the top odd
 * priority. Vertices [0, n) are the original ones; middle vertices follow in
 * canonical edge order.
 */
struct AssumptionArena
{
    TwoPlayerView view;
    ParitySpec priority;
    std::size_t original_vertices = 0;
    std::vector<std::optional<Edge>> middle_of; // per arena vertex; set on middle vertices

    bool is_middle(VertexId v) const { return v >= original_vertices; }
};

AssumptionArena build_assumption_arena(const GameGraph& g, const AggregateUca& others, const ParitySpec& spec,
                                       PlayerId i);

/**
 * Unsafe/colive over-approximation of the adequately permissive assumption
 * on the protagonist of `view` for `spec`, or nullopt when `init` lies
 * outside the cooperative region.
 *
 * Z = cooperative region, rank = shortest distance inside Z to the good
 * recurrence components. Unsafe: protagonist edges leaving Z. Colive:
 * protagonist edges inside Z from a positive-rank vertex that do not
 * decrease the rank.
 */
std::optional<UcaTemplate> approx_apa(const TwoPlayerView& view, const ParitySpec& spec, PlayerId i, VertexId init);
std::optional<UcaTemplate> approx_apa(const GameGraph& g, const ParitySpec& spec, PlayerId i, VertexId init);

/// approx_apa on the assumption arena; the result only uses edges of player i in g.
std::optional<UcaTemplate> compute_uca(const GameGraph& g, const AggregateUca& others, const ParitySpec& spec,
                                       PlayerId i, VertexId init);

} // namespace gwse

#endif
