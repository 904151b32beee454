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

#ifndef GWSE_UCA_HPP
#define GWSE_UCA_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "gwse/game.hpp"

namespace gwse {

/**
 * Unsafe/colive edge template on one player's edges: unsafe edges are never
 * taken, colive edges are taken only finitely often. The empty template is True.
 * An edge is never both; unsafe wins.
 */
struct UcaTemplate
{
    PlayerId player;
    EdgeSet unsafe;
    EdgeSet colive;

    UcaTemplate() = default;
    UcaTemplate(PlayerId p, EdgeSet unsafe_edges = {}, EdgeSet colive_edges = {});

    bool is_true() const { return unsafe.empty() && colive.empty(); }
    bool operator==(const UcaTemplate&) const = default;
};

/// Union of several players' templates (the assumption on "everybody else").
struct AggregateUca
{
    EdgeSet unsafe;
    EdgeSet colive;

    bool operator==(const AggregateUca&) const = default;
};

/// One template per player; entry p.index() belongs to p.
using AssumptionProfile = std::vector<UcaTemplate>;

AssumptionProfile true_profile(int players);

/// Language intersection. Throws ContractViolation on a player mismatch.
UcaTemplate conjoin(const UcaTemplate& a, const UcaTemplate& b);

AggregateUca assumption_of_others(const AssumptionProfile& profile, PlayerId i);
AggregateUca aggregate(const UcaTemplate& t);

/// Structural equality of the normalized edge sets.
bool uca_equal(const UcaTemplate& a, const UcaTemplate& b);

bool lasso_satisfies_uca(const Lasso& l, const EdgeSet& unsafe, const EdgeSet& colive);
bool lasso_satisfies_uca(const Lasso& l, const UcaTemplate& u);
bool lasso_satisfies_uca(const Lasso& l, const AggregateUca& u);

/// Edges of `edges` sorted by their position in g's edge list.
std::vector<Edge> canonical_order(const GameGraph& g, const EdgeSet& edges);

/// "G !(u & X v)" per unsafe edge, then "F G !(u & X v)" per colive edge, joined by " & ".
std::string to_ltl_string(const GameGraph& g, const UcaTemplate& u);

/// {"player": i, "unsafe": [["u","v"], ...], "colive": [...]}
nlohmann::ordered_json to_json(const GameGraph& g, const UcaTemplate& u);
UcaTemplate uca_from_json(const GameGraph& g, const nlohmann::json& j);

} // namespace gwse

#endif
