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

#include "gwse/uca.hpp"

#include <algorithm>

#include "gwse/errors.hpp"

namespace gwse {

UcaTemplate::UcaTemplate(PlayerId p, EdgeSet unsafe_edges, EdgeSet colive_edges)
    : player(p), unsafe(std::move(unsafe_edges)), colive(std::move(colive_edges))
{
    for (const Edge& e : unsafe) colive.erase(e);
}

AssumptionProfile true_profile(int players)
{
    AssumptionProfile out;
    for (int p = 1; p <= players; ++p) out.emplace_back(PlayerId(p));
    return out;
}

UcaTemplate conjoin(const UcaTemplate& a, const UcaTemplate& b)
{
    if (a.player != b.player)
        throw ContractViolation("conjoin: templates of players " + std::to_string(a.player.value()) + " and " +
                                std::to_string(b.player.value()));
    EdgeSet unsafe = a.unsafe;
    unsafe.insert(b.unsafe.begin(), b.unsafe.end());
    EdgeSet colive = a.colive;
    colive.insert(b.colive.begin(), b.colive.end());
    return UcaTemplate(a.player, std::move(unsafe), std::move(colive));
}

AggregateUca aggregate(const UcaTemplate& t)
{
    return AggregateUca{t.unsafe, t.colive};
}

AggregateUca assumption_of_others(const AssumptionProfile& profile, PlayerId i)
{
    AggregateUca out;
    for (const auto& t : profile) {
        if (t.player == i) continue;
        out.unsafe.insert(t.unsafe.begin(), t.unsafe.end());
        out.colive.insert(t.colive.begin(), t.colive.end());
    }
    for (const Edge& e : out.unsafe) out.colive.erase(e);
    return out;
}

bool uca_equal(const UcaTemplate& a, const UcaTemplate& b)
{
    return a.player == b.player && a.unsafe == b.unsafe && a.colive == b.colive;
}

bool lasso_satisfies_uca(const Lasso& l, const EdgeSet& unsafe, const EdgeSet& colive)
{
    for (const Edge& e : l.occurring_edges())
        if (unsafe.contains(e)) return false;
    for (const Edge& e : l.loop_edges())
        if (colive.contains(e)) return false;
    return true;
}

bool lasso_satisfies_uca(const Lasso& l, const UcaTemplate& u)
{
    return lasso_satisfies_uca(l, u.unsafe, u.colive);
}

bool lasso_satisfies_uca(const Lasso& l, const AggregateUca& u)
{
    return lasso_satisfies_uca(l, u.unsafe, u.colive);
}

std::vector<Edge> canonical_order(const GameGraph& g, const EdgeSet& edges)
{
    std::vector<Edge> out(edges.begin(), edges.end());
    auto key = [&](const Edge& e) { return g.edge_index(e).value_or(g.edge_count()); };
    std::stable_sort(out.begin(), out.end(), [&](const Edge& a, const Edge& b) { return key(a) < key(b); });
    return out;
}

std::string to_ltl_string(const GameGraph& g, const UcaTemplate& u)
{
    if (u.is_true()) return "True";
    std::vector<std::string> terms;
    auto atom = [&](const Edge& e) { return "!(" + g.id(e.from) + " & X " + g.id(e.to) + ")"; };
    for (const Edge& e : canonical_order(g, u.unsafe)) terms.push_back("G " + atom(e));
    for (const Edge& e : canonical_order(g, u.colive)) terms.push_back("F G " + atom(e));
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) out += (i ? " & " : "") + terms[i];
    return out;
}

nlohmann::ordered_json to_json(const GameGraph& g, const UcaTemplate& u)
{
    using ojson = nlohmann::ordered_json;
    auto edges = [&](const EdgeSet& s) {
        ojson arr = ojson::array();
        for (const Edge& e : canonical_order(g, s)) arr.push_back(ojson::array({g.id(e.from), g.id(e.to)}));
        return arr;
    };
    ojson j;
    j["player"] = u.player.value();
    j["unsafe"] = edges(u.unsafe);
    j["colive"] = edges(u.colive);
    return j;
}

UcaTemplate uca_from_json(const GameGraph& g, const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("player") || !j["player"].is_number_integer())
        throw ParseError("template", "expected {\"player\": i, \"unsafe\": [...], \"colive\": [...]}");
    const int p = j["player"].get<int>();
    if (p < 1 || p > g.players()) throw ParseError("template.player", "player outside [1;" + std::to_string(g.players()) + "]");
    auto edges = [&](const char* key) {
        EdgeSet out;
        if (!j.contains(key)) return out;
        const auto& arr = j[key];
        if (!arr.is_array()) throw ParseError(std::string("template.") + key, "expected an array");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string path = std::string("template.") + key + "[" + std::to_string(i) + "]";
            const auto& e = arr[i];
            if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
                throw ParseError(path, "expected a [from, to] pair of vertex ids");
            auto from = g.find(e[0].get<std::string>());
            auto to = g.find(e[1].get<std::string>());
            if (!from || !to || !g.has_edge({*from, *to})) throw ParseError(path, "not an edge of the game");
            if (!g.owned_by(*from, PlayerId(p)))
                throw ParseError(path, "edge is not owned by player " + std::to_string(p));
            out.insert({*from, *to});
        }
        return out;
    };
    return UcaTemplate(PlayerId(p), edges("unsafe"), edges("colive"));
}

} // namespace gwse
