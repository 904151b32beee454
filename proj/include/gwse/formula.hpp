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

#ifndef GWSE_FORMULA_HPP
#define GWSE_FORMULA_HPP

#include <memory>
#include <optional>
#include <vector>

#include "gwse/game.hpp"
#include "gwse/uca.hpp"

namespace gwse {

/**
 * Boolean combinations of parity atoms and edge-template atoms.
 *   unsafe(S): no edge of S is ever taken
 *   colive(C): edges of C are taken finitely often
 */
struct Formula
{
    enum class Kind { top, bottom, conj, disj, neg, parity, unsafe, colive };

    Kind kind = Kind::top;
    std::vector<std::shared_ptr<const Formula>> children;
    ParitySpec parity;
    EdgeSet edges;
};

using FormulaPtr = std::shared_ptr<const Formula>;

namespace formula {

FormulaPtr top();
FormulaPtr bottom();
FormulaPtr conj(std::vector<FormulaPtr> parts);
FormulaPtr disj(std::vector<FormulaPtr> parts);
FormulaPtr neg(FormulaPtr f);
FormulaPtr implies(FormulaPtr a, FormulaPtr b);
FormulaPtr parity(ParitySpec spec);
FormulaPtr unsafe(EdgeSet edges);
FormulaPtr colive(EdgeSet edges);
FormulaPtr uca(const UcaTemplate& t);
FormulaPtr uca(const AggregateUca& t);

/// psi_i & (psi_{-i} -> phi_i)
FormulaPtr guarded(const UcaTemplate& own, const AggregateUca& others, const ParitySpec& spec);

/// Edges named by unsafe atoms; the only edges whose prefix occurrence matters.
EdgeSet unsafe_edges(const Formula& f);

} // namespace formula

/// What a formula can observe of an ultimately periodic play.
struct PlaySummary
{
    EdgeSet occurring;
    EdgeSet loop;
    std::vector<VertexId> loop_vertices;
};

PlaySummary summarize(const Lasso& l);
bool evaluate(const Formula& f, const PlaySummary& play);
bool holds(const Formula& f, const Lasso& l);

/**
 * Finite graph whose states project to game vertices; moving from s to t
 * takes the game edge (base[s], base[t]). Used for products of a game
 * with strategy memory or bookkeeping bits.
 */
struct LabeledGraph
{
    std::vector<VertexId> base;
    std::vector<std::vector<std::size_t>> succ;
    std::size_t initial = 0;

    std::size_t size() const { return base.size(); }
};

LabeledGraph plain_graph(const GameGraph& g);

/// A play through the labeled graph and its projection onto the game.
struct StateLasso
{
    std::vector<std::size_t> prefix;
    std::vector<std::size_t> cycle;
    Lasso projected;
};

/**
 * Some ultimately periodic path from `start` (default: initial) satisfying
 * f, or nullopt if there is none. Exact: works on the disjunctive normal
 * form, tracks "some edge of S occurred" with one bit per such literal and
 * refines strongly connected components until every parity literal holds at
 * the component maximum.
 */
std::optional<StateLasso> find_lasso(const LabeledGraph& g, const Formula& f,
                                     std::optional<std::size_t> start = std::nullopt);

/// States from which some ultimately periodic path satisfies f.
std::vector<bool> lasso_region(const LabeledGraph& g, const Formula& f);

/// Closed walk from `entry` through every edge of `loop` among `comp`; the final return to `entry` is left out.
std::vector<VertexId> covering_cycle(const Digraph& loop, const std::vector<VertexId>& comp, VertexId entry);

} // namespace gwse

#endif
