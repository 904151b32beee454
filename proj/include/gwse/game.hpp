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

#ifndef GWSE_GAME_HPP
#define GWSE_GAME_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gwse {

using VertexId = std::size_t;

/**
 * A player of a k-player game, numbered 1..k as in the input documents.
 * index() gives the 0-based position used for per-player vectors.
 */
class PlayerId
{
public:
    constexpr PlayerId() = default;
    constexpr explicit PlayerId(int value) : value_(value) {}

    constexpr int value() const { return value_; }
    constexpr std::size_t index() const { return static_cast<std::size_t>(value_ - 1); }

    static constexpr PlayerId from_index(std::size_t index) { return PlayerId(static_cast<int>(index) + 1); }

    auto operator<=>(const PlayerId&) const = default;

private:
    int value_ = 1;
};

struct Edge
{
    VertexId from = 0;
    VertexId to = 0;

    auto operator<=>(const Edge&) const = default;
};

/// Edge sets are ordered by vertex index; rendering reorders by document edge order.
using EdgeSet = std::set<Edge>;

/// Dense membership set over vertex indices [0, n).
class VertexSet
{
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe, bool full = false) : bits_(universe, full ? 1 : 0) {}

    static VertexSet of(std::size_t universe, std::initializer_list<VertexId> members);

    std::size_t universe() const { return bits_.size(); }
    bool contains(VertexId v) const { return v < bits_.size() && bits_[v] != 0; }
    void insert(VertexId v) { bits_[v] = 1; }
    void erase(VertexId v) { bits_[v] = 0; }
    bool empty() const;
    std::size_t count() const;
    std::vector<VertexId> members() const;

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool subset_of(const VertexSet& other) const;
    bool operator==(const VertexSet& other) const = default;

private:
    std::vector<char> bits_;
};

/**
 * Arena of a k-player turn-based game. Vertex indices follow document order,
 * which is the canonical order for every deterministic choice in the library.
 * Edge endpoints and owners are stored as given; validate_game() reports
 * anything out of range.
 */
class GameGraph
{
public:
    GameGraph() = default;
    GameGraph(int players, std::vector<std::string> ids, std::vector<int> owners, std::vector<Edge> edges,
              VertexId initial);

    int players() const { return players_; }
    std::size_t vertex_count() const { return ids_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::string& id(VertexId v) const { return ids_[v]; }
    const std::vector<std::string>& ids() const { return ids_; }
    std::optional<VertexId> find(std::string_view id) const;

    int owner_value(VertexId v) const { return owners_[v]; }
    PlayerId owner(VertexId v) const { return PlayerId(owners_[v]); }
    const std::vector<int>& owners() const { return owners_; }
    bool owned_by(VertexId v, PlayerId p) const { return owners_[v] == p.value(); }
    VertexSet vertices_of(PlayerId p) const;

    const std::vector<Edge>& edges() const { return edges_; }
    /// Successors in document edge order.
    const std::vector<VertexId>& successors(VertexId v) const { return succ_[v]; }
    std::optional<std::size_t> edge_index(const Edge& e) const;
    bool has_edge(const Edge& e) const { return edge_index(e).has_value(); }

    VertexId initial() const { return initial_; }

    bool operator==(const GameGraph& other) const;

private:
    int players_ = 0;
    std::vector<std::string> ids_;
    std::vector<int> owners_;
    std::vector<Edge> edges_;
    VertexId initial_ = 0;

    std::vector<std::vector<VertexId>> succ_;
    std::unordered_map<std::string, VertexId> index_of_;
    std::vector<std::unordered_map<VertexId, std::size_t>> edge_pos_;
};

/// Parity objective: a play wins iff the largest priority seen infinitely often is even.
struct ParitySpec
{
    std::vector<int> priority;

    int max_priority() const;
    bool operator==(const ParitySpec&) const = default;

    static ParitySpec constant(std::size_t n, int value) { return ParitySpec{std::vector<int>(n, value)}; }
    /// □◇T as priorities {1,2}.
    static ParitySpec buchi(std::size_t n, const VertexSet& target);
    /// ◇□T as priorities {1,0}.
    static ParitySpec co_buchi(std::size_t n, const VertexSet& target);
};

struct Game
{
    GameGraph graph;
    std::vector<ParitySpec> specs; // specs[p.index()]

    int players() const { return graph.players(); }
    const ParitySpec& spec(PlayerId p) const { return specs[p.index()]; }
    bool operator==(const Game&) const = default;
};

/**
 * Ultimately periodic play prefix · cycle^ω. The play starts at prefix[0],
 * or at cycle[0] when the prefix is empty.
 */
struct Lasso
{
    std::vector<VertexId> prefix;
    std::vector<VertexId> cycle;

    VertexId start() const { return prefix.empty() ? cycle.front() : prefix.front(); }
    /// Every edge taken at least once.
    EdgeSet occurring_edges() const;
    /// Edges taken infinitely often.
    EdgeSet loop_edges() const;

    bool operator==(const Lasso&) const = default;
};

/// Consecutive vertices (including the wrap-around) are edges of g.
bool is_valid_lasso(const GameGraph& g, const Lasso& l);
std::string to_string(const GameGraph& g, const Lasso& l);

/**
 * Graph view used by the solvers: all vertices of the parent index space,
 * of which only `active` ones take part. Successor lists keep canonical order
 * and only point at active vertices. Views may contain sinks.
 */
struct Digraph
{
    std::vector<std::vector<VertexId>> succ;
    VertexSet active;

    std::size_t size() const { return succ.size(); }
    bool has_edge(VertexId u, VertexId v) const;
    std::vector<std::vector<VertexId>> predecessors() const;
};

Digraph to_digraph(const GameGraph& g);

/// Restriction of g to keep_vertices, without drop_edges.
Digraph induced_subgraph(const GameGraph& g, const VertexSet& keep_vertices, const EdgeSet& drop_edges = {});
Digraph induced_subgraph(const Digraph& g, const VertexSet& keep_vertices, const EdgeSet& drop_edges = {});

/// Vertices reachable from `from` inside the view.
VertexSet reachable_from(const Digraph& g, VertexId from);

/**
 * Strongly connected components of the view restricted to `within`, in
 * order of their smallest vertex. Trivial components (one vertex, no
 * self-loop) are included.
 */
std::vector<std::vector<VertexId>> strongly_connected_components(const Digraph& g, const VertexSet& within);

/// Every invariant of GameGraph/Game that does not hold; empty iff valid.
std::vector<std::string> validate_game(const Game& game);

/// Parses the JSON game document. Throws ParseError or ValidationError.
Game parse_game(std::string_view text);
std::string serialize_game(const Game& game);

} // namespace gwse

#endif
