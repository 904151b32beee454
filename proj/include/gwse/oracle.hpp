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

#ifndef GWSE_ORACLE_HPP
#define GWSE_ORACLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "gwse/engine.hpp"
#include "gwse/formula.hpp"

// Brute-force ground truth for small games. Nothing in here calls the
// parity solver or the synthesis engine; engine.hpp is included for the
// SpecProfile and FiniteMemoryStrategy data types only.

namespace gwse {

struct OracleBounds
{
    std::size_t max_edges = 16;        // enumerate_recurrences refuses above this
    std::size_t memory = 2;            // strategy memory for realizability enumeration
    std::size_t max_strategies = 1u << 16;
    std::size_t max_states = 1u << 16; // product graphs
};

/// A loop (strongly connected edge set) plus every set of unsafe-relevant edges some play into it can have taken.
struct RecurrenceCase
{
    EdgeSet loop_edges;
    std::vector<EdgeSet> occurrence_sets;
};

/**
 * All strongly connected edge subsets whose vertices are reachable from v0,
 * each with the achievable occurrence sets restricted to `relevant`.
 * Throws OracleRefusal when |E| exceeds max_edges.
 */
std::vector<RecurrenceCase> enumerate_recurrences(const GameGraph& g, const EdgeSet& relevant,
                                                  std::size_t max_edges = OracleBounds{}.max_edges);

/// A play from v0 that follows `loop` forever and has taken exactly `occurred` of the relevant edges.
Lasso witness_for(const GameGraph& g, const EdgeSet& relevant, const EdgeSet& loop, const EdgeSet& occurred);

using PayoffProfile = std::vector<int>;

/// p strictly worse than q for player j: own bit first, then others' bits reversed.
bool preference_less(const PayoffProfile& p, const PayoffProfile& q, PlayerId j);

struct LanguageVerdict
{
    bool equivalent = true;
    std::optional<Lasso> witness; // satisfies exactly one of the two formulas
};

/// Equivalence over all plays from v0, case by case over enumerate_recurrences.
LanguageVerdict language_equivalent(const GameGraph& g, const Formula& a, const Formula& b,
                                    std::size_t max_edges = OracleBounds{}.max_edges);

/// Same question answered by a lasso search for (a & !b) | (!a & b); no edge bound.
LanguageVerdict distinguishing_lasso(const GameGraph& g, const Formula& a, const Formula& b);

/**
 * Product of g with the memory of the given strategies: their owners'
 * moves are fixed, every other vertex keeps all successors. States are
 * (vertex, memory per strategy), reachable from (v0, initial memories).
 */
LabeledGraph strategy_product(const GameGraph& g, const std::vector<const FiniteMemoryStrategy*>& fixed,
                              std::size_t max_states = OracleBounds{}.max_states);

struct StrategyVerdict
{
    bool wins = true;
    std::optional<Lasso> losing_play;
};

/// Every play consistent with s from v0 satisfies f.
StrategyVerdict strategy_wins(const GameGraph& g, const FiniteMemoryStrategy& s, const Formula& f);

/// The unique play of a full strategy profile.
Lasso induced_play(const GameGraph& g, const std::vector<FiniteMemoryStrategy>& profile);

PayoffProfile payoff(const Game& game, const Lasso& play);

struct WseVerdict
{
    bool holds = true;
    bool joint_win = true;                // the profile's own play satisfies every objective
    std::optional<PlayerId> deviator;     // player with a deviation hurting others but not themselves
    std::optional<Lasso> counterexample;
};

/**
 * Winning secure equilibrium check against the original objectives. The
 * deviation part searches all strategies of the deviator at once (a lasso
 * of phi_i & !phi_{-i} in the product with the others' memories), so it is
 * not restricted to any memory bound.
 */
WseVerdict check_wse(const Game& game, const std::vector<FiniteMemoryStrategy>& profile);

/**
 * Winning region of player i for psi_i & (psi_{-i} -> phi_i), found by
 * trying strategies one by one. With memory 2 the strategies may also
 * look at one bit "some other player took an unsafe edge of theirs".
 * fresh: from v with empty history; betrayed: from v once that bit is set.
 */
struct EnumeratedWin
{
    VertexSet fresh;
    VertexSet betrayed;
    std::optional<FiniteMemoryStrategy> strategy; // wins from v0 when v0 is in `fresh`
    std::size_t tried = 0;
};

EnumeratedWin winner_by_enumeration(const GameGraph& g, const UcaTemplate& own, const AggregateUca& others,
                                    const ParitySpec& spec, PlayerId i, const OracleBounds& bounds = {});

struct SecurityVerdict
{
    bool secure = true;
    std::optional<PlayerId> deviator; // nullopt with a counterexample: the joint play itself fails
    std::optional<Lasso> counterexample;
    std::string scope;                // which strategies the verdict covers
};

/**
 * Every profile of strategies winning their psi_i & (psi_{-i} -> phi_i) is a
 * winning secure equilibrium. Decided over all strategies by searching the
 * plays that are consistent with some winning strategy of each constrained
 * player (uses winner_by_enumeration at memory 2).
 */
SecurityVerdict security_exact(const Game& game, const SpecProfile& profile, const OracleBounds& bounds = {});

/**
 * Security restricted to profiles of memoryless strategies (and, at
 * memory 2, strategies with the one "betrayed" bit), checked one profile at
 * a time with check_wse. Refuses above max_profiles.
 */
SecurityVerdict security_by_enumeration(const Game& game, const SpecProfile& profile, std::size_t memory,
                                        std::size_t max_profiles = 4096);

struct GwseReport
{
    bool general = false;
    std::optional<Lasso> generality_witness;
    std::vector<bool> realizable;
    std::vector<std::optional<FiniteMemoryStrategy>> realizing;
    SecurityVerdict security;
    OracleBounds bounds;

    bool passed() const;
};

/**
 * The three equilibrium-specification checks: the conjunction of the
 * guarded specifications has the same plays from v0 as the conjunction of
 * the objectives, every player can enforce their guarded specification
 * alone, and every profile of such strategies is a winning secure equilibrium.
 */
GwseReport verify_gwse(const Game& game, const SpecProfile& profile, const OracleBounds& bounds = {});

} // namespace gwse

#endif
