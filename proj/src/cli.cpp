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

#include "gwse/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gwse/errors.hpp"
#include "gwse/parity.hpp"

namespace gwse {

using ojson = nlohmann::ordered_json;

namespace {

/// Input problems surface as exit code 2.
struct InputError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Game load_game(const CliConfig& cfg)
{
    Game game = parse_game(read_file(cfg.input));
    if (!cfg.env.empty()) {
        std::vector<VertexId> env;
        for (const auto& id : cfg.env) {
            auto v = game.graph.find(id);
            if (!v) throw InputError("--env: unknown vertex '" + id + "'");
            env.push_back(*v);
        }
        game = with_environment(game, env);
    }
    if (!cfg.coalition.empty()) {
        std::vector<PlayerId> members;
        for (int p : cfg.coalition) {
            if (p < 1 || p > game.players()) throw InputError("--coalition: no player " + std::to_string(p));
            members.emplace_back(p);
        }
        game = coalition_game(game, members);
    }
    return game;
}

std::optional<SpecProfile> load_profile(const CliConfig& cfg, const Game& game)
{
    if (!cfg.profile) return std::nullopt;
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(read_file(*cfg.profile));
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(*cfg.profile + ": malformed JSON (" + std::string(e.what()) + ")");
    }
    return profile_from_json(game, doc);
}

ojson id_list(const GameGraph& g, const VertexSet& s)
{
    ojson arr = ojson::array();
    for (VertexId v : s.members()) arr.push_back(g.id(v));
    return arr;
}

std::string render(const ojson& doc)
{
    return doc.dump(2) + "\n";
}

template <class F>
CliResult guarded_run(F&& body)
{
    try {
        return body();
    } catch (const OracleRefusal& e) {
        ojson doc;
        doc["result"] = "refused";
        doc["reason"] = e.what();
        doc["bound"] = e.bound();
        doc["actual"] = e.actual();
        return CliResult{exit_refused, render(doc), std::string("oracle refused: ") + e.what() + " (bound " +
                                                        std::to_string(e.bound()) + ", got " + std::to_string(e.actual()) + ")\n"};
    } catch (const ValidationError& e) {
        std::string err = "invalid game:\n";
        for (const auto& v : e.violations()) err += "  " + v + "\n";
        return CliResult{exit_input, "", err};
    } catch (const ParseError& e) {
        return CliResult{exit_input, "", std::string("parse error at ") + e.what() + "\n"};
    } catch (const InputError& e) {
        return CliResult{exit_input, "", std::string(e.what()) + "\n"};
    } catch (const ContractViolation& e) {
        return CliResult{exit_input, "", std::string(e.what()) + "\n"};
    }
}

std::string template_text(const GameGraph& g, const UcaTemplate& t)
{
    return "psi_" + std::to_string(t.player.value()) + " = " + to_ltl_string(g, t);
}

} // namespace

ojson strategy_to_json(const GameGraph& g, const FiniteMemoryStrategy& s)
{
    ojson j;
    j["player"] = s.player.value();
    j["memory"] = s.memory_size;
    j["initial"] = s.initial;
    ojson moves = ojson::array();
    for (std::size_t m = 0; m < s.memory_size; ++m)
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (s.move[m][v]) moves.push_back(ojson{{"memory", m}, {"vertex", g.id(v)}, {"to", g.id(*s.move[m][v])}});
    j["moves"] = std::move(moves);
    ojson updates = ojson::array();
    for (std::size_t m = 0; m < s.memory_size; ++m)
        for (std::size_t e = 0; e < g.edge_count(); ++e)
            if (s.update[m][e] != m) {
                const Edge& edge = g.edges()[e];
                updates.push_back(ojson{{"memory", m}, {"edge", ojson::array({g.id(edge.from), g.id(edge.to)})}, {"to", s.update[m][e]}});
            }
    j["updates"] = std::move(updates);
    return j;
}

ojson profile_to_json(const Game& game, const SpecProfile& profile, const std::vector<FiniteMemoryStrategy>& strategies)
{
    const GameGraph& g = game.graph;
    ojson doc;
    doc["result"] = "gwse";
    doc["players"] = game.players();
    ojson templates = ojson::array();
    ojson ltl = ojson::object();
    for (const auto& t : profile.templates) {
        templates.push_back(to_json(g, t));
        ltl[std::to_string(t.player.value())] = to_ltl_string(g, t);
    }
    doc["templates"] = std::move(templates);
    doc["ltl"] = std::move(ltl);
    ojson strats = ojson::array();
    for (const auto& s : strategies) strats.push_back(strategy_to_json(g, s));
    doc["strategies"] = std::move(strats);
    return doc;
}

SpecProfile profile_from_json(const Game& game, const nlohmann::json& doc)
{
    if (!doc.is_object() || !doc.contains("templates") || !doc["templates"].is_array())
        throw ParseError("profile", "expected an object with a \"templates\" array");
    if (doc.contains("players") && (!doc["players"].is_number_integer() || doc["players"].get<int>() != game.players()))
        throw ParseError("profile.players", "does not match the game's " + std::to_string(game.players()) + " players");
    AssumptionProfile templates = true_profile(game.players());
    std::vector<bool> seen(static_cast<std::size_t>(game.players()), false);
    for (const auto& t : doc["templates"]) {
        UcaTemplate u = uca_from_json(game.graph, t);
        if (seen[u.player.index()]) throw ParseError("profile.templates", "two templates for player " + std::to_string(u.player.value()));
        seen[u.player.index()] = true;
        templates[u.player.index()] = std::move(u);
    }
    return profile_of(game, std::move(templates));
}

ojson trace_to_json(const GameGraph& g, const SynthesisTrace& trace, bool success)
{
    auto profile_json = [&](const AssumptionProfile& p) {
        ojson arr = ojson::array();
        for (const auto& t : p) arr.push_back(to_json(g, t));
        return arr;
    };
    ojson doc;
    doc["result"] = success ? "gwse" : "false";
    doc["bound"] = trace.bound;
    ojson its = ojson::array();
    for (std::size_t k = 0; k < trace.iterations.size(); ++k) {
        const auto& it = trace.iterations[k];
        ojson j;
        j["iteration"] = k + 1;
        j["initial_wins"] = it.initial_wins;
        j["before"] = profile_json(it.before);
        j["after"] = profile_json(it.after);
        j["no_assumption"] = it.no_assumption ? ojson(it.no_assumption->value()) : ojson(nullptr);
        its.push_back(std::move(j));
    }
    doc["iterations"] = std::move(its);
    return doc;
}

ojson report_to_json(const GameGraph& g, const GwseReport& report)
{
    ojson doc;
    doc["result"] = report.passed() ? "pass" : "fail";
    ojson general;
    general["holds"] = report.general;
    general["witness"] = report.generality_witness ? ojson(to_string(g, *report.generality_witness)) : ojson(nullptr);
    doc["general"] = std::move(general);
    ojson realizable = ojson::array();
    for (std::size_t p = 0; p < report.realizable.size(); ++p) {
        ojson r;
        r["player"] = p + 1;
        r["holds"] = static_cast<bool>(report.realizable[p]);
        r["strategy"] = report.realizing[p] ? strategy_to_json(g, *report.realizing[p]) : ojson(nullptr);
        realizable.push_back(std::move(r));
    }
    doc["realizable"] = std::move(realizable);
    ojson secure;
    secure["holds"] = report.security.secure;
    secure["scope"] = report.security.scope;
    secure["deviator"] = report.security.deviator ? ojson(report.security.deviator->value()) : ojson(nullptr);
    secure["counterexample"] =
        report.security.counterexample ? ojson(to_string(g, *report.security.counterexample)) : ojson(nullptr);
    doc["secure"] = std::move(secure);
    doc["bounds"] = ojson{{"edges", report.bounds.max_edges}, {"memory", report.bounds.memory}};
    return doc;
}

std::string export_dot(const Game& game, const std::optional<SpecProfile>& profile)
{
    const GameGraph& g = game.graph;
    EdgeSet unsafe, colive;
    if (profile)
        for (const auto& t : profile->templates) {
            unsafe.insert(t.unsafe.begin(), t.unsafe.end());
            colive.insert(t.colive.begin(), t.colive.end());
        }
    std::ostringstream out;
    out << "digraph game {\n  rankdir=LR;\n  start [shape=point];\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        std::string prio;
        for (std::size_t p = 0; p < game.specs.size(); ++p)
            prio += (p ? "," : "") + std::to_string(game.specs[p].priority[v]);
        out << "  \"" << g.id(v) << "\" [shape=" << (g.owner_value(v) == 1 ? "box" : "circle") << ", label=\""
            << g.id(v) << "\\n[" << prio << "]\"];\n";
    }
    out << "  start -> \"" << g.id(g.initial()) << "\";\n";
    for (const Edge& e : g.edges()) {
        out << "  \"" << g.id(e.from) << "\" -> \"" << g.id(e.to) << "\"";
        if (unsafe.contains(e))
            out << " [style=dashed, color=red]";
        else if (colive.contains(e))
            out << " [style=dotted, color=orange]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

CliResult run_synth(const CliConfig& cfg)
{
    return guarded_run([&] {
        const Game game = load_game(cfg);
        const SynthesisResult r = o_compute_ge(game);
        if (!r.profile) {
            if (cfg.format == "text") return CliResult{exit_false, "False\n", ""};
            ojson doc;
            doc["result"] = "false";
            return CliResult{exit_false, render(doc), ""};
        }
        std::vector<FiniteMemoryStrategy> strategies;
        for (int p = 1; p <= game.players(); ++p) strategies.push_back(extract_strategy(game, *r.profile, PlayerId(p)));
        if (cfg.format == "text") {
            std::string text;
            for (const auto& t : r.profile->templates) text += template_text(game.graph, t) + "\n";
            return CliResult{exit_ok, text, ""};
        }
        ojson doc = profile_to_json(game, *r.profile, strategies);
        doc["iterations"] = r.trace.iterations.size();
        return CliResult{exit_ok, render(doc), ""};
    });
}

CliResult run_verify(const CliConfig& cfg)
{
    return guarded_run([&] {
        const Game game = load_game(cfg);
        if (!cfg.profile) throw InputError("verify needs --profile");
        const SpecProfile profile = *load_profile(cfg, game);
        OracleBounds bounds;
        bounds.memory = cfg.bound;
        const GwseReport report = verify_gwse(game, profile, bounds);
        const int code = report.passed() ? exit_ok : exit_false;
        if (cfg.format == "text") {
            std::string text = std::string("general: ") + (report.general ? "yes" : "no") + "\n";
            for (std::size_t p = 0; p < report.realizable.size(); ++p)
                text += "realizable " + std::to_string(p + 1) + ": " + (report.realizable[p] ? "yes" : "no") + "\n";
            text += std::string("secure: ") + (report.security.secure ? "yes" : "no") + " (" + report.security.scope + ")\n";
            return CliResult{code, text, ""};
        }
        return CliResult{code, render(report_to_json(game.graph, report)), ""};
    });
}

CliResult run_solve(const CliConfig& cfg)
{
    return guarded_run([&] {
        const Game game = load_game(cfg);
        const GameGraph& g = game.graph;
        ojson players = ojson::array();
        std::string text;
        for (int p = 1; p <= game.players(); ++p) {
            const PlayerId i(p);
            const TwoPlayerView view = TwoPlayerView::of(g, i);
            const SolveResult r = solve_parity(view, game.spec(i));
            const VertexSet coop = cooperative_region(view.graph, game.spec(i));
            ojson j;
            j["player"] = p;
            j["winning"] = id_list(g, r.win_protagonist);
            j["cooperative"] = id_list(g, coop);
            players.push_back(j);
            text += "player " + std::to_string(p) + ": winning " + j["winning"].dump() + ", cooperative " +
                    j["cooperative"].dump() + "\n";
        }
        if (cfg.format == "text") return CliResult{exit_ok, text, ""};
        ojson doc;
        doc["players"] = std::move(players);
        return CliResult{exit_ok, render(doc), ""};
    });
}

CliResult run_trace(const CliConfig& cfg)
{
    return guarded_run([&] {
        const Game game = load_game(cfg);
        const SynthesisResult r = o_compute_ge(game);
        const int code = r.profile ? exit_ok : exit_false;
        if (cfg.format == "text") {
            std::string text;
            for (std::size_t k = 0; k < r.trace.iterations.size(); ++k) {
                const auto& it = r.trace.iterations[k];
                text += "iteration " + std::to_string(k + 1) + ": v0 won by";
                for (std::size_t p = 0; p < it.initial_wins.size(); ++p)
                    text += " " + std::to_string(p + 1) + "=" + (it.initial_wins[p] ? "yes" : "no");
                text += "\n";
                for (const auto& t : it.after) text += "  " + template_text(game.graph, t) + "\n";
            }
            text += r.profile ? "result: gwse\n" : "result: False\n";
            return CliResult{code, text, ""};
        }
        return CliResult{code, render(trace_to_json(game.graph, r.trace, r.profile.has_value())), ""};
    });
}

CliResult run_export_dot(const CliConfig& cfg)
{
    return guarded_run([&] {
        const Game game = load_game(cfg);
        return CliResult{exit_ok, export_dot(game, load_profile(cfg, game)), ""};
    });
}

CliResult run(const CliConfig& cfg)
{
    CliResult r;
    if (cfg.command == "synth")
        r = run_synth(cfg);
    else if (cfg.command == "verify")
        r = run_verify(cfg);
    else if (cfg.command == "solve")
        r = run_solve(cfg);
    else if (cfg.command == "trace")
        r = run_trace(cfg);
    else if (cfg.command == "export-dot")
        r = run_export_dot(cfg);
    else
        return CliResult{exit_input, "", "unknown command '" + cfg.command + "'\n"};

    if (cfg.output && !r.out.empty()) {
        std::ofstream f(*cfg.output, std::ios::binary);
        if (!f) return CliResult{exit_input, "", "cannot write " + *cfg.output + "\n"};
        f << r.out;
        r.out.clear();
    }
    return r;
}

int cli_main(int argc, char** argv)
{
    CLI::App app{"Equilibrium specification synthesis for multi-player parity games"};
    app.require_subcommand(1);
    CliConfig cfg;

    auto common = [&](CLI::App* sub) {
        sub->add_option("-i,--input", cfg.input, "game document (JSON)")->required();
        sub->add_option("-o,--output", cfg.output, "write the result here instead of stdout");
        sub->add_option("--coalition", cfg.coalition, "players keeping their objective; others get True")->delimiter(',');
        sub->add_option("--env", cfg.env, "vertices handed to an extra environment player")->delimiter(',');
        sub->add_option("--bound", cfg.bound, "strategy memory used by the oracle")->check(CLI::PositiveNumber);
        sub->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    };
    CLI::App* synth = app.add_subcommand("synth", "synthesize an equilibrium specification profile");
    CLI::App* verify = app.add_subcommand("verify", "check a profile with the brute-force oracle");
    CLI::App* solve = app.add_subcommand("solve", "zero-sum and cooperative regions per player");
    CLI::App* trace = app.add_subcommand("trace", "print every synthesis iteration");
    CLI::App* dot = app.add_subcommand("export-dot", "render the game (and a profile) as Graphviz");
    for (CLI::App* sub : {synth, verify, solve, trace, dot}) common(sub);
    verify->add_option("--profile", cfg.profile, "profile document produced by synth")->required();
    dot->add_option("--profile", cfg.profile, "profile document whose template edges get styled");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }
    for (CLI::App* sub : app.get_subcommands()) cfg.command = sub->get_name();

    const CliResult r = run(cfg);
    std::cout << r.out;
    std::cerr << r.err;
    return r.code;
}

} // namespace gwse
