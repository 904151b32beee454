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

#include "gwse/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "gwse/errors.hpp"

namespace gwse {

namespace {

FormulaPtr borrow(const Formula& f)
{
    return FormulaPtr(std::shared_ptr<const Formula>{}, &f);
}

/// Edges of `loop` as a Digraph over g's vertices.
Digraph loop_digraph(const GameGraph& g, const EdgeSet& loop)
{
    Digraph d;
    d.succ.assign(g.vertex_count(), {});
    d.active = VertexSet(g.vertex_count());
    for (const Edge& e : loop) {
        d.active.insert(e.from);
        d.active.insert(e.to);
        d.succ[e.from].push_back(e.to);
    }
    return d;
}

/// (vertex, occurred-relevant-edges) states reachable from (v0, {}), with BFS parents.
struct OccurrenceSearch
{
    std::vector<Edge> relevant;
    std::map<std::pair<VertexId, std::size_t>, std::optional<std::pair<VertexId, std::size_t>>> parent;
    std::vector<std::pair<VertexId, std::size_t>> order;

    std::size_t bits_of(const Edge& e) const
    {
        auto it = std::find(relevant.begin(), relevant.end(), e);
        return it == relevant.end() ? 0 : std::size_t{1} << (it - relevant.begin());
    }
    std::size_t bits_of(const EdgeSet& s) const
    {
        std::size_t m = 0;
        for (const Edge& e : s) m |= bits_of(e);
        return m;
    }
    EdgeSet edges_of(std::size_t mask) const
    {
        EdgeSet out;
        for (std::size_t j = 0; j < relevant.size(); ++j)
            if (mask >> j & 1) out.insert(relevant[j]);
        return out;
    }

    OccurrenceSearch(const GameGraph& g, const EdgeSet& rel) : relevant(canonical_order(g, rel))
    {
        std::deque<std::pair<VertexId, std::size_t>> queue{{g.initial(), 0}};
        parent[{g.initial(), 0}] = std::nullopt;
        while (!queue.empty()) {
            auto [v, m] = queue.front();
            queue.pop_front();
            order.push_back({v, m});
            for (VertexId w : g.successors(v)) {
                const std::pair<VertexId, std::size_t> next{w, m | bits_of(Edge{v, w})};
                if (parent.contains(next)) continue;
                parent[next] = std::pair{v, m};
                queue.push_back(next);
            }
        }
    }

    std::vector<VertexId> path_to(std::pair<VertexId, std::size_t> s) const
    {
        std::vector<VertexId> path{s.first};
        for (auto p = parent.at(s); p; p = parent.at(*p)) path.push_back(p->first);
        std::reverse(path.begin(), path.end());
        return path;
    }
};

bool strongly_connected(const Digraph& d)
{
    const auto members = d.active.members();
    if (members.empty()) return false;
    const VertexSet forward = reachable_from(d, members.front());
    if (!d.active.subset_of(forward)) return false;
    Digraph rev;
    rev.succ = d.predecessors();
    rev.active = d.active;
    return d.active.subset_of(reachable_from(rev, members.front()));
}

void require_profile(const Game& game, const std::vector<FiniteMemoryStrategy>& profile)
{
    if (profile.size() != static_cast<std::size_t>(game.players()))
        throw ContractViolation("strategy profile has " + std::to_string(profile.size()) + " strategies for " +
                                std::to_string(game.players()) + " players");
    for (std::size_t p = 0; p < profile.size(); ++p)
        if (profile[p].player != PlayerId::from_index(p))
            throw ContractViolation("strategy " + std::to_string(p + 1) + " belongs to player " +
                                    std::to_string(profile[p].player.value()));
}

FormulaPtr objectives_of(const Game& game, std::optional<PlayerId> except = std::nullopt)
{
    std::vector<FormulaPtr> parts;
    for (int p = 1; p <= game.players(); ++p)
        if (!except || *except != PlayerId(p)) parts.push_back(formula::parity(game.spec(PlayerId(p))));
    return formula::conj(std::move(parts));
}

FormulaPtr guarded_of(const SpecProfile& profile, PlayerId i)
{
    return formula::guarded(profile.own(i), profile.others(i), profile.spec(i));
}

/// Mixed-radix walk over one successor choice per vertex in `owned`.
class ChoiceCounter
{
public:
    ChoiceCounter(const GameGraph& g, std::vector<VertexId> owned) : g_(g), owned_(std::move(owned)), digit_(owned_.size(), 0) {}

    std::size_t total(std::size_t cap) const
    {
        std::size_t t = 1;
        for (VertexId v : owned_) {
            t *= g_.successors(v).size();
            if (t > cap) return cap + 1;
        }
        return t;
    }
    std::vector<std::optional<VertexId>> choice() const
    {
        std::vector<std::optional<VertexId>> out(g_.vertex_count());
        for (std::size_t k = 0; k < owned_.size(); ++k) out[owned_[k]] = g_.successors(owned_[k])[digit_[k]];
        return out;
    }
    bool next()
    {
        for (std::size_t k = 0; k < owned_.size(); ++k) {
            if (++digit_[k] < g_.successors(owned_[k]).size()) return true;
            digit_[k] = 0;
        }
        return false;
    }

private:
    const GameGraph& g_;
    std::vector<VertexId> owned_;
    std::vector<std::size_t> digit_;
};

/// g with player i's moves fixed by `choice`; states 0..n-1 are the vertices.
LabeledGraph restricted(const GameGraph& g, PlayerId i, const std::vector<std::optional<VertexId>>& choice)
{
    LabeledGraph out = plain_graph(g);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.owned_by(v, i)) out.succ[v] = {*choice[v]};
    return out;
}

/// Two copies of g: taking an edge of `trigger` from copy 0 lands in copy 1 (states n..2n-1).
LabeledGraph flagged(const GameGraph& g, PlayerId i, const EdgeSet& trigger,
                     const std::vector<std::optional<VertexId>>& before,
                     const std::vector<std::optional<VertexId>>& after)
{
    const std::size_t n = g.vertex_count();
    LabeledGraph out;
    out.initial = g.initial();
    out.base.resize(2 * n);
    out.succ.resize(2 * n);
    for (VertexId v = 0; v < n; ++v) {
        out.base[v] = out.base[n + v] = v;
        const bool mine = g.owned_by(v, i);
        for (VertexId w : g.successors(v)) {
            if (!mine || before[v] == w) out.succ[v].push_back(trigger.contains({v, w}) ? n + w : w);
            if (!mine || after[v] == w) out.succ[n + v].push_back(n + w);
        }
    }
    return out;
}

FiniteMemoryStrategy strategy_from(const GameGraph& g, PlayerId i, const EdgeSet& trigger,
                                   const std::vector<std::vector<std::optional<VertexId>>>& moves)
{
    FiniteMemoryStrategy s;
    s.player = i;
    s.memory_size = moves.size();
    s.move = moves;
    s.update.assign(s.memory_size, std::vector<std::size_t>(g.edge_count(), 0));
    for (std::size_t m = 0; m < s.memory_size; ++m)
        for (std::size_t e = 0; e < g.edge_count(); ++e)
            s.update[m][e] = (s.memory_size == 2 && (m == 1 || trigger.contains(g.edges()[e]))) ? 1 : 0;
    return s;
}

} // namespace

std::vector<RecurrenceCase> enumerate_recurrences(const GameGraph& g, const EdgeSet& relevant, std::size_t max_edges)
{
    const std::size_t m = g.edge_count();
    if (m > max_edges) throw OracleRefusal(max_edges, m, "enumerate_recurrences: too many edges");
    const OccurrenceSearch search(g, relevant);

    std::vector<RecurrenceCase> out;
    for (std::size_t subset = 1; subset < (std::size_t{1} << m); ++subset) {
        EdgeSet loop;
        for (std::size_t e = 0; e < m; ++e)
            if (subset >> e & 1) loop.insert(g.edges()[e]);
        const Digraph d = loop_digraph(g, loop);
        if (!strongly_connected(d)) continue;

        const std::size_t in_loop = search.bits_of(loop);
        std::vector<std::size_t> masks;
        for (const auto& [v, seen] : search.order)
            if (d.active.contains(v)) masks.push_back(seen | in_loop);
        if (masks.empty()) continue;
        std::sort(masks.begin(), masks.end());
        masks.erase(std::unique(masks.begin(), masks.end()), masks.end());

        RecurrenceCase c;
        c.loop_edges = std::move(loop);
        for (std::size_t mask : masks) c.occurrence_sets.push_back(search.edges_of(mask));
        out.push_back(std::move(c));
    }
    return out;
}

Lasso witness_for(const GameGraph& g, const EdgeSet& relevant, const EdgeSet& loop, const EdgeSet& occurred)
{
    const OccurrenceSearch search(g, relevant);
    const Digraph d = loop_digraph(g, loop);
    const std::size_t in_loop = search.bits_of(loop);
    const std::size_t want = search.bits_of(occurred);
    for (const auto& state : search.order) {
        if (!d.active.contains(state.first) || (state.second | in_loop) != want) continue;
        std::vector<VertexId> path = search.path_to(state);
        path.pop_back();
        return Lasso{std::move(path), covering_cycle(d, d.active.members(), state.first)};
    }
    throw ContractViolation("witness_for: no play reaches the loop with the requested occurrences");
}

bool preference_less(const PayoffProfile& p, const PayoffProfile& q, PlayerId j)
{
    if (p.size() != q.size()) throw ContractViolation("preference_less: payoff profiles of different length");
    const std::size_t me = j.index();
    if (me >= p.size()) throw ContractViolation("preference_less: player outside the profile");
    if (p[me] < q[me]) return true;
    if (p[me] != q[me]) return false;
    bool some_greater = false;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (k == me) continue;
        if (p[k] < q[k]) return false;
        if (p[k] > q[k]) some_greater = true;
    }
    return some_greater;
}

LanguageVerdict language_equivalent(const GameGraph& g, const Formula& a, const Formula& b, std::size_t max_edges)
{
    EdgeSet relevant = formula::unsafe_edges(a);
    const EdgeSet more = formula::unsafe_edges(b);
    relevant.insert(more.begin(), more.end());

    for (const RecurrenceCase& c : enumerate_recurrences(g, relevant, max_edges)) {
        PlaySummary play;
        play.loop = c.loop_edges;
        play.loop_vertices = loop_digraph(g, c.loop_edges).active.members();
        for (const EdgeSet& occurred : c.occurrence_sets) {
            play.occurring = occurred;
            play.occurring.insert(c.loop_edges.begin(), c.loop_edges.end());
            if (evaluate(a, play) != evaluate(b, play))
                return LanguageVerdict{false, witness_for(g, relevant, c.loop_edges, occurred)};
        }
    }
    return LanguageVerdict{true, std::nullopt};
}

LanguageVerdict distinguishing_lasso(const GameGraph& g, const Formula& a, const Formula& b)
{
    using namespace formula;
    const FormulaPtr fa = borrow(a), fb = borrow(b);
    const FormulaPtr differ = disj({conj({fa, neg(fb)}), conj({neg(fa), fb})});
    if (auto l = find_lasso(plain_graph(g), *differ)) return LanguageVerdict{false, l->projected};
    return LanguageVerdict{true, std::nullopt};
}

LabeledGraph strategy_product(const GameGraph& g, const std::vector<const FiniteMemoryStrategy*>& fixed,
                              std::size_t max_states)
{
    std::vector<const FiniteMemoryStrategy*> by_player(static_cast<std::size_t>(g.players()), nullptr);
    for (const FiniteMemoryStrategy* s : fixed) {
        if (s->player.value() < 1 || s->player.value() > g.players())
            throw ContractViolation("strategy of unknown player " + std::to_string(s->player.value()));
        if (by_player[s->player.index()]) throw ContractViolation("two strategies for one player");
        if (s->move.size() != s->memory_size || s->update.size() != s->memory_size || s->initial >= s->memory_size)
            throw ContractViolation("malformed strategy of player " + std::to_string(s->player.value()));
        by_player[s->player.index()] = s;
    }

    using Key = std::pair<VertexId, std::vector<std::size_t>>;
    std::map<Key, std::size_t> index;
    std::vector<Key> keys;
    LabeledGraph out;
    auto intern = [&](Key k) {
        auto [it, fresh] = index.emplace(k, keys.size());
        if (fresh) {
            if (keys.size() >= max_states) throw OracleRefusal(max_states, keys.size() + 1, "strategy product states");
            keys.push_back(std::move(k));
            out.base.push_back(keys.back().first);
            out.succ.emplace_back();
        }
        return it->second;
    };

    std::vector<std::size_t> start;
    for (const auto* s : fixed) start.push_back(s->initial);
    out.initial = intern({g.initial(), start});
    for (std::size_t at = 0; at < keys.size(); ++at) {
        const VertexId v = keys[at].first;
        const std::vector<std::size_t> mem = keys[at].second;
        std::vector<VertexId> targets;
        const FiniteMemoryStrategy* owner = by_player[g.owner(v).index()];
        if (owner) {
            const std::size_t slot = static_cast<std::size_t>(std::find(fixed.begin(), fixed.end(), owner) - fixed.begin());
            const auto& choice = owner->move[mem[slot]][v];
            if (!choice || !g.has_edge({v, *choice}))
                throw ContractViolation("strategy of player " + std::to_string(owner->player.value()) +
                                        " has no legal move at " + g.id(v));
            targets.push_back(*choice);
        } else {
            targets = g.successors(v);
        }
        for (VertexId w : targets) {
            const std::size_t e = *g.edge_index({v, w});
            std::vector<std::size_t> next(fixed.size());
            for (std::size_t k = 0; k < fixed.size(); ++k) next[k] = fixed[k]->update[mem[k]][e];
            const std::size_t to = intern({w, std::move(next)});
            out.succ[at].push_back(to);
        }
    }
    return out;
}

StrategyVerdict strategy_wins(const GameGraph& g, const FiniteMemoryStrategy& s, const Formula& f)
{
    const LabeledGraph product = strategy_product(g, {&s});
    if (auto l = find_lasso(product, *formula::neg(borrow(f)))) return StrategyVerdict{false, l->projected};
    return StrategyVerdict{true, std::nullopt};
}

Lasso induced_play(const GameGraph& g, const std::vector<FiniteMemoryStrategy>& profile)
{
    std::vector<const FiniteMemoryStrategy*> fixed;
    for (const auto& s : profile) fixed.push_back(&s);
    const LabeledGraph product = strategy_product(g, fixed);
    std::vector<std::size_t> position(product.size(), static_cast<std::size_t>(-1));
    std::vector<std::size_t> walk;
    std::size_t at = product.initial;
    while (position[at] == static_cast<std::size_t>(-1)) {
        position[at] = walk.size();
        walk.push_back(at);
        if (product.succ[at].size() != 1) throw ContractViolation("induced_play: profile does not fix every move");
        at = product.succ[at].front();
    }
    Lasso l;
    for (std::size_t k = 0; k < walk.size(); ++k)
        (k < position[at] ? l.prefix : l.cycle).push_back(product.base[walk[k]]);
    return l;
}

PayoffProfile payoff(const Game& game, const Lasso& play)
{
    PayoffProfile out;
    for (int p = 1; p <= game.players(); ++p) out.push_back(holds(*formula::parity(game.spec(PlayerId(p))), play) ? 1 : 0);
    return out;
}

WseVerdict check_wse(const Game& game, const std::vector<FiniteMemoryStrategy>& profile)
{
    require_profile(game, profile);
    const GameGraph& g = game.graph;
    WseVerdict out;

    const Lasso play = induced_play(g, profile);
    if (!holds(*objectives_of(game), play)) {
        out.holds = out.joint_win = false;
        out.counterexample = play;
        return out;
    }
    if (game.players() < 2) return out;

    for (int p = 1; p <= game.players(); ++p) {
        const PlayerId i(p);
        std::vector<const FiniteMemoryStrategy*> others;
        for (const auto& s : profile)
            if (s.player != i) others.push_back(&s);
        const LabeledGraph product = strategy_product(g, others);
        using namespace formula;
        const FormulaPtr harmful = conj({parity(game.spec(i)), neg(objectives_of(game, i))});
        if (auto l = find_lasso(product, *harmful)) {
            out.holds = false;
            out.deviator = i;
            out.counterexample = l->projected;
            return out;
        }
    }
    return out;
}

EnumeratedWin winner_by_enumeration(const GameGraph& g, const UcaTemplate& own, const AggregateUca& others,
                                    const ParitySpec& spec, PlayerId i, const OracleBounds& bounds)
{
    const std::size_t n = g.vertex_count();
    const FormulaPtr star = formula::guarded(own, others, spec);
    const FormulaPtr lose_star = formula::neg(star);
    const FormulaPtr lose_own = formula::neg(formula::uca(own));
    const bool two_copies = bounds.memory >= 2 && !others.unsafe.empty();

    std::vector<VertexId> owned = g.vertices_of(i).members();
    EnumeratedWin out{VertexSet(n), VertexSet(n), std::nullopt, 0};
    const std::size_t per_copy = ChoiceCounter(g, owned).total(bounds.max_strategies);
    if (per_copy > bounds.max_strategies) throw OracleRefusal(bounds.max_strategies, per_copy, "strategies per copy");

    // Once betrayed only psi_i is left; a safety and co-Buchi condition, so one
    // memoryless strategy wins from the whole betrayed region.
    std::vector<std::pair<std::vector<std::optional<VertexId>>, VertexSet>> after;
    {
        ChoiceCounter c(g, owned);
        do {
            const auto choice = c.choice();
            const auto bad = lasso_region(restricted(g, i, choice), *lose_own);
            VertexSet good(n);
            for (VertexId v = 0; v < n; ++v)
                if (!bad[v]) good.insert(v);
            out.betrayed |= good;
            after.emplace_back(choice, std::move(good));
            ++out.tried;
        } while (c.next());
    }

    if (!two_copies) {
        ChoiceCounter c(g, owned);
        do {
            const auto choice = c.choice();
            const auto bad = lasso_region(restricted(g, i, choice), *lose_star);
            for (VertexId v = 0; v < n; ++v)
                if (!bad[v]) out.fresh.insert(v);
            if (!bad[g.initial()] && !out.strategy) out.strategy = strategy_from(g, i, {}, {choice});
            ++out.tried;
        } while (c.next());
        return out;
    }

    const auto uniform = std::find_if(after.begin(), after.end(), [&](const auto& a) { return a.second == out.betrayed; });
    if (uniform == after.end()) throw ContractViolation("winner_by_enumeration: no uniform strategy after betrayal");
    const auto& later = uniform->first;
    ChoiceCounter c(g, owned);
    do {
        const auto choice = c.choice();
        const auto bad = lasso_region(flagged(g, i, others.unsafe, choice, later), *lose_star);
        for (VertexId v = 0; v < n; ++v)
            if (!bad[v]) out.fresh.insert(v);
        if (!bad[g.initial()] && !out.strategy) out.strategy = strategy_from(g, i, others.unsafe, {choice, later});
        ++out.tried;
    } while (c.next());
    return out;
}

namespace {

SecurityVerdict security_with(const Game& game, const SpecProfile& profile, const std::vector<EnumeratedWin>& win,
                              const OracleBounds& bounds)
{
    const GameGraph& g = game.graph;
    const std::size_t k = static_cast<std::size_t>(game.players());
    const std::size_t n = g.vertex_count();
    SecurityVerdict out;
    out.scope = "all strategies";

    // State (v, b): bit l of b records that player l took one of their own unsafe edges.
    const std::size_t width = std::size_t{1} << k;
    if (n * width > bounds.max_states) throw OracleRefusal(bounds.max_states, n * width, "security product states");
    auto bits_of = [&](const Edge& e) {
        std::size_t b = 0;
        for (std::size_t l = 0; l < k; ++l)
            if (profile.templates[l].unsafe.contains(e)) b |= std::size_t{1} << l;
        return b;
    };

    std::vector<FormulaPtr> guarded;
    for (std::size_t j = 0; j < k; ++j) guarded.push_back(guarded_of(profile, PlayerId::from_index(j)));

    for (std::size_t d = 0; d <= k; ++d) {
        const std::optional<PlayerId> deviator = d == k ? std::nullopt : std::optional{PlayerId::from_index(d)};
        if (deviator && k < 2) continue;
        auto allowed = [&](VertexId v, std::size_t b) {
            for (std::size_t j = 0; j < k; ++j) {
                if (deviator && j == d) continue;
                if (b >> j & 1) return false;
                const bool betrayed = (b & ~(std::size_t{1} << j)) != 0;
                if (!(betrayed ? win[j].betrayed : win[j].fresh).contains(v)) return false;
            }
            return true;
        };
        if (!allowed(g.initial(), 0)) continue;

        LabeledGraph product;
        std::vector<long> index(n * width, -1);
        std::vector<std::pair<VertexId, std::size_t>> states;
        auto intern = [&](VertexId v, std::size_t b) {
            long& slot = index[v * width + b];
            if (slot < 0) {
                slot = static_cast<long>(states.size());
                states.push_back({v, b});
                product.base.push_back(v);
                product.succ.emplace_back();
            }
            return static_cast<std::size_t>(slot);
        };
        product.initial = intern(g.initial(), 0);
        for (std::size_t at = 0; at < states.size(); ++at) {
            const auto [v, b] = states[at];
            for (VertexId w : g.successors(v)) {
                const std::size_t nb = b | bits_of({v, w});
                if (!allowed(w, nb)) continue;
                const std::size_t to = intern(w, nb);
                product.succ[at].push_back(to);
            }
        }

        using namespace formula;
        std::vector<FormulaPtr> parts;
        for (std::size_t j = 0; j < k; ++j)
            if (!deviator || j != d) parts.push_back(guarded[j]);
        if (deviator) {
            parts.push_back(parity(game.spec(*deviator)));
            parts.push_back(neg(objectives_of(game, *deviator)));
        } else {
            parts.push_back(neg(objectives_of(game)));
        }
        if (auto l = find_lasso(product, *conj(std::move(parts)))) {
            out.secure = false;
            out.deviator = deviator;
            out.counterexample = l->projected;
            return out;
        }
    }
    return out;
}

std::vector<EnumeratedWin> all_winners(const Game& game, const SpecProfile& profile, const OracleBounds& bounds)
{
    std::vector<EnumeratedWin> out;
    for (int p = 1; p <= game.players(); ++p) {
        const PlayerId i(p);
        out.push_back(winner_by_enumeration(game.graph, profile.own(i), profile.others(i), profile.spec(i), i, bounds));
    }
    return out;
}

} // namespace

SecurityVerdict security_exact(const Game& game, const SpecProfile& profile, const OracleBounds& bounds)
{
    OracleBounds exact = bounds;
    exact.memory = 2;
    return security_with(game, profile, all_winners(game, profile, exact), exact);
}

SecurityVerdict security_by_enumeration(const Game& game, const SpecProfile& profile, std::size_t memory,
                                        std::size_t max_profiles)
{
    const GameGraph& g = game.graph;
    const std::size_t k = static_cast<std::size_t>(game.players());
    std::vector<std::vector<FiniteMemoryStrategy>> winning(k);
    std::size_t profiles = 1;
    for (std::size_t j = 0; j < k; ++j) {
        const PlayerId i = PlayerId::from_index(j);
        const AggregateUca others = profile.others(i);
        const FormulaPtr star = guarded_of(profile, i);
        const std::vector<VertexId> owned = g.vertices_of(i).members();
        const std::size_t count = ChoiceCounter(g, owned).total(max_profiles);
        if (count > max_profiles) throw OracleRefusal(max_profiles, count, "strategies of one player");

        std::vector<std::vector<std::optional<VertexId>>> choices;
        ChoiceCounter c(g, owned);
        do choices.push_back(c.choice());
        while (c.next());

        for (const auto& a : choices) {
            FiniteMemoryStrategy s = strategy_from(g, i, {}, {a});
            if (strategy_wins(g, s, *star).wins) winning[j].push_back(std::move(s));
        }
        if (memory >= 2 && !others.unsafe.empty()) {
            for (const auto& a : choices)
                for (const auto& b : choices) {
                    if (a == b) continue;
                    FiniteMemoryStrategy s = strategy_from(g, i, others.unsafe, {a, b});
                    if (strategy_wins(g, s, *star).wins) winning[j].push_back(std::move(s));
                }
        }
        profiles *= std::max<std::size_t>(winning[j].size(), 1);
        if (profiles > max_profiles) throw OracleRefusal(max_profiles, profiles, "strategy profiles");
    }

    SecurityVerdict out;
    out.scope = memory >= 2 ? "strategies with at most 2 memory states (betrayal bit)" : "memoryless strategies";
    if (std::any_of(winning.begin(), winning.end(), [](const auto& w) { return w.empty(); })) return out;

    std::vector<std::size_t> digit(k, 0);
    while (true) {
        std::vector<FiniteMemoryStrategy> pick;
        for (std::size_t j = 0; j < k; ++j) pick.push_back(winning[j][digit[j]]);
        const WseVerdict v = check_wse(game, pick);
        if (!v.holds) {
            out.secure = false;
            out.deviator = v.deviator;
            out.counterexample = v.counterexample;
            return out;
        }
        std::size_t j = 0;
        for (; j < k; ++j) {
            if (++digit[j] < winning[j].size()) break;
            digit[j] = 0;
        }
        if (j == k) break;
    }
    return out;
}

bool GwseReport::passed() const
{
    return general && security.secure && std::all_of(realizable.begin(), realizable.end(), [](bool b) { return b; });
}

GwseReport verify_gwse(const Game& game, const SpecProfile& profile, const OracleBounds& bounds)
{
    const GameGraph& g = game.graph;
    if (profile.templates.size() != static_cast<std::size_t>(game.players()) || profile.specs != game.specs)
        throw ContractViolation("verify_gwse: profile does not belong to this game");

    GwseReport report;
    report.bounds = bounds;

    std::vector<FormulaPtr> guarded;
    for (int p = 1; p <= game.players(); ++p) guarded.push_back(guarded_of(profile, PlayerId(p)));
    const LanguageVerdict general = language_equivalent(g, *formula::conj(guarded), *objectives_of(game), bounds.max_edges);
    report.general = general.equivalent;
    report.generality_witness = general.witness;

    const std::vector<EnumeratedWin> win = all_winners(game, profile, bounds);
    for (int p = 1; p <= game.players(); ++p) {
        const PlayerId i(p);
        const auto& w = win[i.index()];
        bool ok = w.fresh.contains(g.initial()) && w.strategy && strategy_wins(g, *w.strategy, *guarded[i.index()]).wins;
        report.realizable.push_back(ok);
        report.realizing.push_back(ok ? w.strategy : std::nullopt);
    }

    if (bounds.memory >= 2) {
        report.security = security_with(game, profile, win, bounds);
    } else {
        report.security = security_exact(game, profile, bounds);
    }
    return report;
}

} // namespace gwse
