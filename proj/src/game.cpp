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

#include "gwse/game.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "gwse/errors.hpp"

namespace gwse {

namespace {

std::string join_violations(const std::vector<std::string>& violations)
{
    std::string out = "invalid game";
    for (const auto& v : violations) {
        out += "\n  - ";
        out += v;
    }
    return out;
}

} // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : std::runtime_error(join_violations(violations)), violations_(std::move(violations))
{
}

// ---------------------------------------------------------------------------
// VertexSet

VertexSet VertexSet::of(std::size_t universe, std::initializer_list<VertexId> members)
{
    VertexSet s(universe);
    for (VertexId v : members) s.insert(v);
    return s;
}

bool VertexSet::empty() const
{
    return std::none_of(bits_.begin(), bits_.end(), [](char b) { return b != 0; });
}

std::size_t VertexSet::count() const
{
    return static_cast<std::size_t>(std::count_if(bits_.begin(), bits_.end(), [](char b) { return b != 0; }));
}

std::vector<VertexId> VertexSet::members() const
{
    std::vector<VertexId> out;
    for (VertexId v = 0; v < bits_.size(); ++v)
        if (bits_[v]) out.push_back(v);
    return out;
}

VertexSet& VertexSet::operator|=(const VertexSet& other)
{
    for (std::size_t i = 0; i < bits_.size() && i < other.bits_.size(); ++i) bits_[i] = bits_[i] | other.bits_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other)
{
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] = (i < other.bits_.size()) ? (bits_[i] & other.bits_[i]) : 0;
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other)
{
    for (std::size_t i = 0; i < bits_.size() && i < other.bits_.size(); ++i)
        if (other.bits_[i]) bits_[i] = 0;
    return *this;
}

bool VertexSet::subset_of(const VertexSet& other) const
{
    for (VertexId v = 0; v < bits_.size(); ++v)
        if (bits_[v] && !other.contains(v)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// GameGraph

GameGraph::GameGraph(int players, std::vector<std::string> ids, std::vector<int> owners, std::vector<Edge> edges,
                     VertexId initial)
    : players_(players), ids_(std::move(ids)), owners_(std::move(owners)), edges_(std::move(edges)), initial_(initial)
{
    const std::size_t n = ids_.size();
    owners_.resize(n, 0);
    succ_.assign(n, {});
    edge_pos_.assign(n, {});
    for (VertexId v = 0; v < n; ++v) index_of_.emplace(ids_[v], v);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.from >= n || e.to >= n) continue;
        if (edge_pos_[e.from].emplace(e.to, i).second) succ_[e.from].push_back(e.to);
    }
}

std::optional<VertexId> GameGraph::find(std::string_view id) const
{
    auto it = index_of_.find(std::string(id));
    if (it == index_of_.end()) return std::nullopt;
    return it->second;
}

VertexSet GameGraph::vertices_of(PlayerId p) const
{
    VertexSet s(vertex_count());
    for (VertexId v = 0; v < vertex_count(); ++v)
        if (owners_[v] == p.value()) s.insert(v);
    return s;
}

std::optional<std::size_t> GameGraph::edge_index(const Edge& e) const
{
    if (e.from >= edge_pos_.size()) return std::nullopt;
    auto it = edge_pos_[e.from].find(e.to);
    if (it == edge_pos_[e.from].end()) return std::nullopt;
    return it->second;
}

bool GameGraph::operator==(const GameGraph& other) const
{
    return players_ == other.players_ && ids_ == other.ids_ && owners_ == other.owners_ &&
           edges_ == other.edges_ && initial_ == other.initial_;
}

// ---------------------------------------------------------------------------
// ParitySpec

int ParitySpec::max_priority() const
{
    return priority.empty() ? 0 : *std::max_element(priority.begin(), priority.end());
}

ParitySpec ParitySpec::buchi(std::size_t n, const VertexSet& target)
{
    ParitySpec s = constant(n, 1);
    for (VertexId v = 0; v < n; ++v)
        if (target.contains(v)) s.priority[v] = 2;
    return s;
}

ParitySpec ParitySpec::co_buchi(std::size_t n, const VertexSet& target)
{
    ParitySpec s = constant(n, 1);
    for (VertexId v = 0; v < n; ++v)
        if (target.contains(v)) s.priority[v] = 0;
    return s;
}

// ---------------------------------------------------------------------------
// Lasso

EdgeSet Lasso::occurring_edges() const
{
    EdgeSet out = loop_edges();
    for (std::size_t i = 0; i + 1 < prefix.size(); ++i) out.insert({prefix[i], prefix[i + 1]});
    if (!prefix.empty() && !cycle.empty()) out.insert({prefix.back(), cycle.front()});
    return out;
}

EdgeSet Lasso::loop_edges() const
{
    EdgeSet out;
    for (std::size_t i = 0; i < cycle.size(); ++i) out.insert({cycle[i], cycle[(i + 1) % cycle.size()]});
    return out;
}

bool is_valid_lasso(const GameGraph& g, const Lasso& l)
{
    if (l.cycle.empty()) return false;
    for (const Edge& e : l.occurring_edges())
        if (!g.has_edge(e)) return false;
    return true;
}

std::string to_string(const GameGraph& g, const Lasso& l)
{
    std::ostringstream out;
    for (VertexId v : l.prefix) out << g.id(v) << ' ';
    out << '(';
    for (std::size_t i = 0; i < l.cycle.size(); ++i) out << (i ? " " : "") << g.id(l.cycle[i]);
    out << ")^omega";
    return out.str();
}

// ---------------------------------------------------------------------------
// Views

bool Digraph::has_edge(VertexId u, VertexId v) const
{
    if (u >= succ.size()) return false;
    return std::find(succ[u].begin(), succ[u].end(), v) != succ[u].end();
}

std::vector<std::vector<VertexId>> Digraph::predecessors() const
{
    std::vector<std::vector<VertexId>> pred(size());
    for (VertexId u = 0; u < size(); ++u)
        if (active.contains(u))
            for (VertexId v : succ[u]) pred[v].push_back(u);
    return pred;
}

Digraph to_digraph(const GameGraph& g)
{
    Digraph d;
    d.active = VertexSet(g.vertex_count(), true);
    d.succ.resize(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) d.succ[v] = g.successors(v);
    return d;
}

Digraph induced_subgraph(const Digraph& g, const VertexSet& keep_vertices, const EdgeSet& drop_edges)
{
    Digraph d;
    d.active = g.active & keep_vertices;
    d.succ.resize(g.size());
    for (VertexId u = 0; u < g.size(); ++u) {
        if (!d.active.contains(u)) continue;
        for (VertexId v : g.succ[u])
            if (d.active.contains(v) && !drop_edges.contains(Edge{u, v})) d.succ[u].push_back(v);
    }
    return d;
}

Digraph induced_subgraph(const GameGraph& g, const VertexSet& keep_vertices, const EdgeSet& drop_edges)
{
    return induced_subgraph(to_digraph(g), keep_vertices, drop_edges);
}

VertexSet reachable_from(const Digraph& g, VertexId from)
{
    VertexSet seen(g.size());
    if (!g.active.contains(from)) return seen;
    std::vector<VertexId> stack{from};
    seen.insert(from);
    while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        for (VertexId v : g.succ[u])
            if (!seen.contains(v)) {
                seen.insert(v);
                stack.push_back(v);
            }
    }
    return seen;
}

std::vector<std::vector<VertexId>> strongly_connected_components(const Digraph& g, const VertexSet& within)
{
    // Iterative Tarjan.
    const std::size_t n = g.size();
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unvisited), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<VertexId> stack;
    std::vector<std::vector<VertexId>> components;
    std::size_t counter = 0;

    struct Frame
    {
        VertexId v;
        std::size_t next;
    };

    auto inside = [&](VertexId v) { return g.active.contains(v) && within.contains(v); };

    for (VertexId root = 0; root < n; ++root) {
        if (!inside(root) || index[root] != unvisited) continue;
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& out = g.succ[f.v];
            if (f.next < out.size()) {
                VertexId w = out[f.next++];
                if (!inside(w)) continue;
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            VertexId v = f.v;
            frames.pop_back();
            if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            if (low[v] == index[v]) {
                std::vector<VertexId> comp;
                VertexId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp.push_back(w);
                } while (w != v);
                std::sort(comp.begin(), comp.end());
                components.push_back(std::move(comp));
            }
        }
    }
    std::sort(components.begin(), components.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return components;
}

// ---------------------------------------------------------------------------
// Validation

std::vector<std::string> validate_game(const Game& game)
{
    std::vector<std::string> out;
    const GameGraph& g = game.graph;
    const std::size_t n = g.vertex_count();
    const int k = g.players();

    if (k < 1) out.push_back("number of players must be at least 1, got " + std::to_string(k));
    if (n == 0) out.push_back("game has no vertices");
    if (n > 0 && g.initial() >= n) out.push_back("initial vertex is not declared");

    std::set<std::string> seen_ids;
    for (VertexId v = 0; v < n; ++v) {
        if (g.id(v).empty()) out.push_back("vertex #" + std::to_string(v) + " has an empty id");
        if (!seen_ids.insert(g.id(v)).second) out.push_back("duplicate vertex id '" + g.id(v) + "'");
        const int owner = g.owner_value(v);
        if (owner < 1 || owner > k)
            out.push_back("vertex '" + g.id(v) + "' has owner " + std::to_string(owner) + " outside [1;" +
                          std::to_string(k) + "]");
    }

    std::set<Edge> seen_edges;
    for (const Edge& e : g.edges()) {
        if (e.from >= n || e.to >= n) {
            out.push_back("edge #" + std::to_string(&e - g.edges().data()) + " has an undeclared endpoint");
            continue;
        }
        if (!seen_edges.insert(e).second)
            out.push_back("duplicate edge (" + g.id(e.from) + "," + g.id(e.to) + ")");
    }
    for (VertexId v = 0; v < n; ++v)
        if (g.successors(v).empty()) out.push_back("vertex '" + g.id(v) + "' has no outgoing edge");

    if (k >= 1 && game.specs.size() != static_cast<std::size_t>(k))
        out.push_back("expected " + std::to_string(k) + " parity specifications, got " +
                      std::to_string(game.specs.size()));
    for (std::size_t p = 0; p < game.specs.size(); ++p) {
        const auto& pr = game.specs[p].priority;
        if (pr.size() != n) {
            out.push_back("priority function of player " + std::to_string(p + 1) + " does not cover every vertex");
            continue;
        }
        for (VertexId v = 0; v < n; ++v)
            if (pr[v] < 0)
                out.push_back("vertex '" + g.id(v) + "' has negative priority for player " + std::to_string(p + 1));
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON documents

namespace {

using json = nlohmann::json;

std::string line_column(std::string_view text, std::size_t byte)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const json& field(const json& obj, const char* key, const std::string& path)
{
    if (!obj.is_object()) throw ParseError(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(path + "." + key, "missing field");
    return *it;
}

int as_int(const json& j, const std::string& path)
{
    if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
    return j.get<int>();
}

std::string as_id(const json& j, const std::string& path)
{
    if (!j.is_string()) throw ParseError(path, "expected a vertex id string");
    return j.get<std::string>();
}

} // namespace

Game parse_game(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(line_column(text, e.byte), "malformed JSON");
    }
    if (!doc.is_object()) throw ParseError("$", "expected a JSON object");

    const int k = as_int(field(doc, "players", "$"), "$.players");
    const std::string init = as_id(field(doc, "init", "$"), "$.init");
    const json& vertices = field(doc, "vertices", "$");
    const json& edges = field(doc, "edges", "$");
    if (!vertices.is_array()) throw ParseError("$.vertices", "expected an array");
    if (!edges.is_array()) throw ParseError("$.edges", "expected an array");

    std::vector<std::string> violations;

    // Optional sugar: {"<player>": {"buchi": [...]} | {"cobuchi": [...]}}
    struct Sugar
    {
        bool buchi = true;
        std::vector<std::string> targets;
        std::string path;
    };
    std::vector<std::optional<Sugar>> sugar(k > 0 ? static_cast<std::size_t>(k) : 0);
    if (auto it = doc.find("sugar"); it != doc.end()) {
        if (!it->is_object()) throw ParseError("$.sugar", "expected an object");
        for (const auto& [key, body] : it->items()) {
            const std::string path = "$.sugar." + key;
            int p = 0;
            try {
                std::size_t used = 0;
                p = std::stoi(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw ParseError(path, "player key must be an integer");
            }
            if (p < 1 || p > k) throw ParseError(path, "player outside [1;" + std::to_string(k) + "]");
            if (!body.is_object() || body.size() != 1)
                throw ParseError(path, "expected exactly one of \"buchi\" or \"cobuchi\"");
            Sugar s;
            s.path = path;
            if (body.contains("buchi")) {
                s.buchi = true;
            } else if (body.contains("cobuchi")) {
                s.buchi = false;
            } else {
                throw ParseError(path, "expected exactly one of \"buchi\" or \"cobuchi\"");
            }
            const json& list = body.begin().value();
            if (!list.is_array()) throw ParseError(path + "." + body.begin().key(), "expected an array");
            for (std::size_t t = 0; t < list.size(); ++t)
                s.targets.push_back(as_id(list[t], path + "." + body.begin().key() + "[" + std::to_string(t) + "]"));
            sugar[static_cast<std::size_t>(p - 1)] = std::move(s);
        }
    }

    std::vector<std::string> ids;
    std::vector<int> owners;
    std::vector<std::vector<std::optional<int>>> explicit_priority(sugar.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const std::string path = "$.vertices[" + std::to_string(i) + "]";
        const json& v = vertices[i];
        std::string id = as_id(field(v, "id", path), path + ".id");
        ids.push_back(id);
        owners.push_back(as_int(field(v, "owner", path), path + ".owner"));
        for (auto& col : explicit_priority) col.emplace_back();
        if (auto it = v.find("priority"); it != v.end()) {
            if (!it->is_object()) throw ParseError(path + ".priority", "expected an object keyed by player");
            for (const auto& [key, value] : it->items()) {
                const std::string ppath = path + ".priority." + key;
                int p = 0;
                try {
                    std::size_t used = 0;
                    p = std::stoi(key, &used);
                    if (used != key.size()) throw std::invalid_argument(key);
                } catch (const std::exception&) {
                    throw ParseError(ppath, "player key must be an integer");
                }
                if (p < 1 || p > k) throw ParseError(ppath, "player outside [1;" + std::to_string(k) + "]");
                if (sugar[static_cast<std::size_t>(p - 1)])
                    throw ParseError(ppath, "player " + key + " is given both priorities and sugar");
                explicit_priority[static_cast<std::size_t>(p - 1)].back() = as_int(value, ppath);
            }
        }
    }

    std::unordered_map<std::string, VertexId> index_of;
    for (VertexId v = 0; v < ids.size(); ++v) index_of.emplace(ids[v], v);
    const VertexId undeclared = ids.size() + 1;
    auto resolve = [&](const std::string& id, const std::string& what) -> VertexId {
        auto it = index_of.find(id);
        if (it != index_of.end()) return it->second;
        violations.push_back(what + " refers to undeclared vertex '" + id + "'");
        return undeclared;
    };

    std::vector<Edge> edge_list;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string path = "$.edges[" + std::to_string(i) + "]";
        const json& e = edges[i];
        if (!e.is_array() || e.size() != 2) throw ParseError(path, "expected a [from, to] pair");
        const std::string from = as_id(e[0], path + "[0]");
        const std::string to = as_id(e[1], path + "[1]");
        edge_list.push_back({resolve(from, "edge " + path), resolve(to, "edge " + path)});
    }
    const VertexId initial = resolve(init, "initial vertex");

    std::vector<ParitySpec> specs;
    for (std::size_t p = 0; p < sugar.size(); ++p) {
        ParitySpec spec = ParitySpec::constant(ids.size(), 0);
        if (sugar[p]) {
            VertexSet target(ids.size());
            for (const auto& t : sugar[p]->targets) {
                VertexId v = resolve(t, "sugar of player " + std::to_string(p + 1));
                if (v < ids.size()) target.insert(v);
            }
            spec = sugar[p]->buchi ? ParitySpec::buchi(ids.size(), target) : ParitySpec::co_buchi(ids.size(), target);
        } else {
            for (VertexId v = 0; v < ids.size(); ++v) {
                if (!explicit_priority[p][v])
                    throw ParseError("$.vertices[" + std::to_string(v) + "].priority",
                                     "missing priority for player " + std::to_string(p + 1));
                spec.priority[v] = *explicit_priority[p][v];
            }
        }
        specs.push_back(std::move(spec));
    }

    Game game{GameGraph(k, std::move(ids), std::move(owners), std::move(edge_list), initial), std::move(specs)};
    for (auto& v : validate_game(game))
        if (v.find("undeclared endpoint") == std::string::npos && v.find("initial vertex is not declared") == std::string::npos)
            violations.push_back(std::move(v));
    if (!violations.empty()) throw ValidationError(std::move(violations));
    return game;
}

std::string serialize_game(const Game& game)
{
    using ojson = nlohmann::ordered_json;
    const GameGraph& g = game.graph;
    ojson doc;
    doc["players"] = g.players();
    doc["init"] = g.id(g.initial());
    ojson vertices = ojson::array();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        ojson vj;
        vj["id"] = g.id(v);
        vj["owner"] = g.owner_value(v);
        ojson pr = ojson::object();
        for (std::size_t p = 0; p < game.specs.size(); ++p) pr[std::to_string(p + 1)] = game.specs[p].priority[v];
        vj["priority"] = std::move(pr);
        vertices.push_back(std::move(vj));
    }
    doc["vertices"] = std::move(vertices);
    ojson edges = ojson::array();
    for (const Edge& e : g.edges()) edges.push_back(ojson::array({g.id(e.from), g.id(e.to)}));
    doc["edges"] = std::move(edges);
    return doc.dump(2) + "\n";
}

} // namespace gwse
