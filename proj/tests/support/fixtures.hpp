// Shared helpers for the unit tests and the acceptance binary.
#ifndef GWSE_TEST_FIXTURES_HPP
#define GWSE_TEST_FIXTURES_HPP

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gwse/game.hpp"
#include "gwse/uca.hpp"

#ifndef GWSE_DATA_DIR
#error "GWSE_DATA_DIR must point at the data/ directory"
#endif

namespace gwse::testing {

inline std::string data_path(const std::string& name)
{
    return std::string(GWSE_DATA_DIR) + "/" + name;
}

inline Game load(const std::string& name)
{
    std::ifstream in(data_path(name));
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_game(ss.str());
}

inline Game buchi_pair() { return load("buchi_pair.json"); }
inline Game cobuchi_pair() { return load("cobuchi_pair.json"); }

inline VertexId vx(const GameGraph& g, const std::string& id)
{
    auto v = g.find(id);
    if (!v) throw std::invalid_argument("no vertex " + id);
    return *v;
}

inline Edge ed(const GameGraph& g, const std::string& a, const std::string& b)
{
    return Edge{vx(g, a), vx(g, b)};
}

inline EdgeSet edges(const GameGraph& g, std::initializer_list<std::pair<const char*, const char*>> list)
{
    EdgeSet out;
    for (auto [a, b] : list) out.insert(ed(g, a, b));
    return out;
}

inline VertexSet vset(const GameGraph& g, std::initializer_list<const char*> ids)
{
    VertexSet s(g.vertex_count());
    for (const char* id : ids) s.insert(vx(g, id));
    return s;
}

struct RandomGameParams
{
    int min_players = 2;
    int max_players = 3;
    std::size_t max_vertices = 6;
    std::size_t max_edges = 10;
    int max_priority = 3;
};

/// Random sink-free game; vertex 0 is initial.
inline Game random_game(std::mt19937_64& rng, const RandomGameParams& p = {})
{
    auto pick = [&](auto lo, auto hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng); };
    const int k = static_cast<int>(pick(p.min_players, p.max_players));
    const std::size_t n = static_cast<std::size_t>(pick(1, static_cast<long long>(p.max_vertices)));
    const std::size_t m = static_cast<std::size_t>(pick(static_cast<long long>(n), static_cast<long long>(std::min(p.max_edges, n * n))));

    std::vector<std::string> ids;
    std::vector<int> owners;
    for (std::size_t v = 0; v < n; ++v) {
        ids.push_back("v" + std::to_string(v));
        owners.push_back(static_cast<int>(pick(1, k)));
    }
    EdgeSet chosen;
    std::vector<Edge> list;
    auto add = [&](Edge e) {
        if (chosen.insert(e).second) list.push_back(e);
    };
    for (VertexId v = 0; v < n; ++v) add(Edge{v, static_cast<VertexId>(pick(0, static_cast<long long>(n - 1)))});
    while (list.size() < m)
        add(Edge{static_cast<VertexId>(pick(0, static_cast<long long>(n - 1))),
                 static_cast<VertexId>(pick(0, static_cast<long long>(n - 1)))});

    Game game{GameGraph(k, ids, owners, list, 0), {}};
    for (int i = 0; i < k; ++i) {
        ParitySpec s;
        for (std::size_t v = 0; v < n; ++v) s.priority.push_back(static_cast<int>(pick(0, p.max_priority)));
        game.specs.push_back(s);
    }
    return game;
}

/// Random template over player i's edges; unsafe and colive are disjoint.
inline UcaTemplate random_template(std::mt19937_64& rng, const GameGraph& g, PlayerId i)
{
    std::uniform_int_distribution<int> d(0, 3);
    UcaTemplate t(i);
    for (const Edge& e : g.edges()) {
        if (!g.owned_by(e.from, i)) continue;
        const int r = d(rng);
        if (r == 0) t.unsafe.insert(e);
        else if (r == 1) t.colive.insert(e);
    }
    return t;
}

inline AssumptionProfile random_profile(std::mt19937_64& rng, const GameGraph& g)
{
    AssumptionProfile p;
    for (int i = 1; i <= g.players(); ++i) p.push_back(random_template(rng, g, PlayerId(i)));
    return p;
}

} // namespace gwse::testing

#endif
