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

#include "gwse/formula.hpp"

#include <algorithm>
#include <deque>

#include "gwse/errors.hpp"

namespace gwse {

namespace formula {

namespace {

FormulaPtr make(Formula::Kind kind)
{
    auto f = std::make_shared<Formula>();
    f->kind = kind;
    return f;
}

} // namespace

FormulaPtr top()
{
    return make(Formula::Kind::top);
}

FormulaPtr bottom()
{
    return make(Formula::Kind::bottom);
}

FormulaPtr conj(std::vector<FormulaPtr> parts)
{
    if (parts.empty()) return top();
    if (parts.size() == 1) return parts.front();
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Kind::conj;
    f->children = std::move(parts);
    return f;
}

FormulaPtr disj(std::vector<FormulaPtr> parts)
{
    if (parts.empty()) return bottom();
    if (parts.size() == 1) return parts.front();
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Kind::disj;
    f->children = std::move(parts);
    return f;
}

FormulaPtr neg(FormulaPtr g)
{
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Kind::neg;
    f->children.push_back(std::move(g));
    return f;
}

FormulaPtr implies(FormulaPtr a, FormulaPtr b)
{
    return disj({neg(std::move(a)), std::move(b)});
}

FormulaPtr parity(ParitySpec spec)
{
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Kind::parity;
    f->parity = std::move(spec);
    return f;
}

FormulaPtr unsafe(EdgeSet edges)
{
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Kind::unsafe;
    f->edges = std::move(edges);
    return f;
}

FormulaPtr colive(EdgeSet edges)
{
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Kind::colive;
    f->edges = std::move(edges);
    return f;
}

FormulaPtr uca(const UcaTemplate& t)
{
    return conj({unsafe(t.unsafe), colive(t.colive)});
}

FormulaPtr uca(const AggregateUca& t)
{
    return conj({unsafe(t.unsafe), colive(t.colive)});
}

FormulaPtr guarded(const UcaTemplate& own, const AggregateUca& others, const ParitySpec& spec)
{
    return conj({uca(own), implies(uca(others), parity(spec))});
}

EdgeSet unsafe_edges(const Formula& f)
{
    EdgeSet out;
    if (f.kind == Formula::Kind::unsafe) out = f.edges;
    for (const auto& c : f.children) {
        EdgeSet sub = unsafe_edges(*c);
        out.insert(sub.begin(), sub.end());
    }
    return out;
}

} // namespace formula

PlaySummary summarize(const Lasso& l)
{
    return PlaySummary{l.occurring_edges(), l.loop_edges(), l.cycle};
}

bool evaluate(const Formula& f, const PlaySummary& play)
{
    using K = Formula::Kind;
    switch (f.kind) {
    case K::top:
        return true;
    case K::bottom:
        return false;
    case K::conj:
        return std::all_of(f.children.begin(), f.children.end(), [&](const FormulaPtr& c) { return evaluate(*c, play); });
    case K::disj:
        return std::any_of(f.children.begin(), f.children.end(), [&](const FormulaPtr& c) { return evaluate(*c, play); });
    case K::neg:
        return !evaluate(*f.children.front(), play);
    case K::parity: {
        int top = -1;
        for (VertexId v : play.loop_vertices) top = std::max(top, f.parity.priority[v]);
        return top % 2 == 0;
    }
    case K::unsafe:
        return std::none_of(f.edges.begin(), f.edges.end(), [&](const Edge& e) { return play.occurring.contains(e); });
    case K::colive:
        return std::none_of(f.edges.begin(), f.edges.end(), [&](const Edge& e) { return play.loop.contains(e); });
    }
    return false;
}

bool holds(const Formula& f, const Lasso& l)
{
    return evaluate(f, summarize(l));
}

LabeledGraph plain_graph(const GameGraph& g)
{
    LabeledGraph out;
    out.initial = g.initial();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out.base.push_back(v);
        out.succ.emplace_back(g.successors(v).begin(), g.successors(v).end());
    }
    return out;
}

namespace {

constexpr std::size_t max_terms = 1u << 14;
constexpr std::size_t max_occurs_bits = 12;

/// One disjunct of the normal form.
struct Term
{
    EdgeSet avoid;                  // never taken
    std::vector<EdgeSet> occurs;    // each: some edge taken at least once
    EdgeSet loop_avoid;             // taken finitely often
    std::vector<EdgeSet> loop_has;  // each: some edge taken infinitely often
    std::vector<std::pair<const ParitySpec*, bool>> parity; // (spec, wants even)

    bool contradictory() const
    {
        auto covered = [](const EdgeSet& s, const EdgeSet& a, const EdgeSet& b) {
            return std::all_of(s.begin(), s.end(), [&](const Edge& e) { return a.contains(e) || b.contains(e); });
        };
        for (const auto& s : occurs)
            if (covered(s, avoid, {})) return true;
        for (const auto& s : loop_has)
            if (covered(s, avoid, loop_avoid)) return true;
        return false;
    }
};

Term merge(const Term& a, const Term& b)
{
    Term t = a;
    t.avoid.insert(b.avoid.begin(), b.avoid.end());
    t.occurs.insert(t.occurs.end(), b.occurs.begin(), b.occurs.end());
    t.loop_avoid.insert(b.loop_avoid.begin(), b.loop_avoid.end());
    t.loop_has.insert(t.loop_has.end(), b.loop_has.begin(), b.loop_has.end());
    t.parity.insert(t.parity.end(), b.parity.begin(), b.parity.end());
    return t;
}

std::vector<Term> normal_form(const Formula& f, bool positive)
{
    using K = Formula::Kind;
    auto product = [&](const std::vector<FormulaPtr>& parts) {
        std::vector<Term> acc{Term{}};
        for (const auto& p : parts) {
            std::vector<Term> next;
            for (const Term& x : acc)
                for (const Term& y : normal_form(*p, positive)) {
                    Term t = merge(x, y);
                    if (!t.contradictory()) next.push_back(std::move(t));
                }
            if (next.size() > max_terms) throw OracleRefusal(max_terms, next.size(), "normal form terms");
            acc = std::move(next);
        }
        return acc;
    };
    auto sum = [&](const std::vector<FormulaPtr>& parts) {
        std::vector<Term> acc;
        for (const auto& p : parts) {
            auto sub = normal_form(*p, positive);
            acc.insert(acc.end(), sub.begin(), sub.end());
        }
        return acc;
    };

    switch (f.kind) {
    case K::top:
        return positive ? std::vector<Term>{Term{}} : std::vector<Term>{};
    case K::bottom:
        return positive ? std::vector<Term>{} : std::vector<Term>{Term{}};
    case K::conj:
        return positive ? product(f.children) : sum(f.children);
    case K::disj:
        return positive ? sum(f.children) : product(f.children);
    case K::neg:
        return normal_form(*f.children.front(), !positive);
    case K::parity: {
        Term t;
        t.parity.emplace_back(&f.parity, positive);
        return {t};
    }
    case K::unsafe: {
        Term t;
        if (positive) {
            t.avoid = f.edges;
        } else {
            if (f.edges.empty()) return {};
            t.occurs.push_back(f.edges);
        }
        return {t};
    }
    case K::colive: {
        Term t;
        if (positive) {
            t.loop_avoid = f.edges;
        } else {
            if (f.edges.empty()) return {};
            t.loop_has.push_back(f.edges);
        }
        return {t};
    }
    }
    return {};
}

/// g x {subsets of the term's occurrence literals}; state id = s * width + mask.
class TermProduct
{
public:
    TermProduct(const LabeledGraph& g, const Term& t) : g_(g), t_(t)
    {
        if (t.occurs.size() > max_occurs_bits) throw OracleRefusal(max_occurs_bits, t.occurs.size(), "occurrence literals");
        width_ = std::size_t{1} << t.occurs.size();
        full_ = width_ - 1;
        const std::size_t n = g.size() * width_;
        digraph_.succ.assign(n, {});
        digraph_.active = VertexSet(n, true);
        for (std::size_t s = 0; s < g.size(); ++s) {
            for (std::size_t u : g.succ[s]) {
                const Edge label{g.base[s], g.base[u]};
                if (t.avoid.contains(label)) continue;
                std::size_t bits = 0;
                for (std::size_t j = 0; j < t.occurs.size(); ++j)
                    if (t.occurs[j].contains(label)) bits |= std::size_t{1} << j;
                for (std::size_t m = 0; m < width_; ++m) digraph_.succ[s * width_ + m].push_back(u * width_ + (m | bits));
            }
        }
        find_good_components();
    }

    std::size_t id(std::size_t s, std::size_t mask) const { return s * width_ + mask; }
    std::size_t state(std::size_t p) const { return p / width_; }
    const Digraph& digraph() const { return digraph_; }
    const Digraph& loop_graph() const { return loop_; }
    /// Component index per product state, or -1.
    const std::vector<int>& component_of() const { return component_of_; }
    const std::vector<std::vector<VertexId>>& components() const { return good_; }

private:
    Edge label(std::size_t p, std::size_t q) const { return {g_.base[state(p)], g_.base[state(q)]}; }

    void find_good_components()
    {
        const std::size_t n = digraph_.size();
        loop_.succ.assign(n, {});
        loop_.active = VertexSet(n);
        for (std::size_t s = 0; s < g_.size(); ++s) loop_.active.insert(id(s, full_));
        for (VertexId p : loop_.active.members())
            for (VertexId q : digraph_.succ[p])
                if (loop_.active.contains(q) && !t_.loop_avoid.contains(label(p, q))) loop_.succ[p].push_back(q);

        component_of_.assign(n, -1);
        std::vector<std::vector<VertexId>> work = strongly_connected_components(loop_, loop_.active);
        while (!work.empty()) {
            std::vector<VertexId> comp = std::move(work.back());
            work.pop_back();
            VertexSet inside = VertexSet(n);
            for (VertexId p : comp) inside.insert(p);
            bool has_edge = false;
            for (VertexId p : comp)
                for (VertexId q : loop_.succ[p])
                    if (inside.contains(q)) has_edge = true;
            if (!has_edge) continue;

            bool refined = false;
            for (const auto& [spec, even] : t_.parity) {
                int top = -1;
                for (VertexId p : comp) top = std::max(top, spec->priority[g_.base[state(p)]]);
                if ((top % 2 == 0) == even) continue;
                VertexSet rest = inside;
                for (VertexId p : comp)
                    if (spec->priority[g_.base[state(p)]] == top) rest.erase(p);
                for (auto& sub : strongly_connected_components(loop_, rest)) work.push_back(std::move(sub));
                refined = true;
                break;
            }
            if (refined) continue;

            bool complete = true;
            for (const EdgeSet& want : t_.loop_has) {
                bool found = false;
                for (VertexId p : comp)
                    for (VertexId q : loop_.succ[p])
                        if (inside.contains(q) && want.contains(label(p, q))) found = true;
                if (!found) {
                    complete = false;
                    break;
                }
            }
            if (!complete) continue;
            std::sort(comp.begin(), comp.end());
            for (VertexId p : comp) component_of_[p] = static_cast<int>(good_.size());
            good_.push_back(std::move(comp));
        }
    }

    const LabeledGraph& g_;
    const Term& t_;
    std::size_t width_ = 1;
    std::size_t full_ = 0;
    Digraph digraph_;
    Digraph loop_;
    std::vector<int> component_of_;
    std::vector<std::vector<VertexId>> good_;
};

VertexSet backward_reachable_states(const Digraph& g, const VertexSet& target)
{
    const auto pred = g.predecessors();
    VertexSet seen = target;
    std::vector<VertexId> stack = target.members();
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

/// Shortest path from `from` to `to` inside `graph`, both endpoints included.
std::vector<VertexId> path_between(const Digraph& graph, const VertexSet& inside, VertexId from, VertexId to)
{
    if (from == to) return {from};
    std::vector<std::optional<VertexId>> parent(graph.size());
    std::deque<VertexId> queue{from};
    VertexSet seen(graph.size());
    seen.insert(from);
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (VertexId w : graph.succ[v]) {
            if (!inside.contains(w) || seen.contains(w)) continue;
            seen.insert(w);
            parent[w] = v;
            if (w == to) {
                std::vector<VertexId> path{to};
                while (path.back() != from) path.push_back(*parent[path.back()]);
                std::reverse(path.begin(), path.end());
                return path;
            }
            queue.push_back(w);
        }
    }
    return {};
}

} // namespace

std::vector<VertexId> covering_cycle(const Digraph& loop, const std::vector<VertexId>& comp, VertexId entry)
{
    VertexSet inside(loop.size());
    for (VertexId p : comp) inside.insert(p);
    std::vector<Edge> todo;
    for (VertexId p : comp)
        for (VertexId q : loop.succ[p])
            if (inside.contains(q)) todo.push_back({p, q});
    EdgeSet covered;
    std::vector<VertexId> walk{entry};
    auto extend = [&](const std::vector<VertexId>& path) {
        for (std::size_t k = 1; k < path.size(); ++k) {
            covered.insert({path[k - 1], path[k]});
            walk.push_back(path[k]);
        }
    };
    for (const Edge& e : todo) {
        if (covered.contains(e)) continue;
        extend(path_between(loop, inside, walk.back(), e.from));
        extend({e.from, e.to});
    }
    extend(path_between(loop, inside, walk.back(), entry));
    walk.pop_back();
    return walk;
}

std::optional<StateLasso> find_lasso(const LabeledGraph& g, const Formula& f, std::optional<std::size_t> start)
{
    const std::size_t from = start.value_or(g.initial);
    for (const Term& t : normal_form(f, true)) {
        TermProduct prod(g, t);
        const Digraph& d = prod.digraph();
        const std::size_t origin = prod.id(from, 0);

        std::vector<std::optional<VertexId>> parent(d.size());
        VertexSet seen(d.size());
        seen.insert(origin);
        std::deque<VertexId> queue{origin};
        std::optional<VertexId> hit;
        while (!queue.empty() && !hit) {
            VertexId p = queue.front();
            queue.pop_front();
            if (prod.component_of()[p] >= 0) {
                hit = p;
                break;
            }
            for (VertexId q : d.succ[p])
                if (!seen.contains(q)) {
                    seen.insert(q);
                    parent[q] = p;
                    queue.push_back(q);
                }
        }
        if (!hit) continue;

        std::vector<VertexId> path{*hit};
        while (parent[path.back()]) path.push_back(*parent[path.back()]);
        std::reverse(path.begin(), path.end());
        path.pop_back();

        const auto& comp = prod.components()[static_cast<std::size_t>(prod.component_of()[*hit])];
        std::vector<VertexId> cycle = covering_cycle(prod.loop_graph(), comp, *hit);

        StateLasso out;
        for (VertexId p : path) {
            out.prefix.push_back(prod.state(p));
            out.projected.prefix.push_back(g.base[prod.state(p)]);
        }
        for (VertexId p : cycle) {
            out.cycle.push_back(prod.state(p));
            out.projected.cycle.push_back(g.base[prod.state(p)]);
        }
        return out;
    }
    return std::nullopt;
}

std::vector<bool> lasso_region(const LabeledGraph& g, const Formula& f)
{
    std::vector<bool> out(g.size(), false);
    for (const Term& t : normal_form(f, true)) {
        TermProduct prod(g, t);
        VertexSet good(prod.digraph().size());
        for (std::size_t p = 0; p < prod.component_of().size(); ++p)
            if (prod.component_of()[p] >= 0) good.insert(p);
        if (good.empty()) continue;
        const VertexSet back = backward_reachable_states(prod.digraph(), good);
        for (std::size_t s = 0; s < g.size(); ++s)
            if (back.contains(prod.id(s, 0))) out[s] = true;
    }
    return out;
}

} // namespace gwse
