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

#ifndef GWSE_CLI_HPP
#define GWSE_CLI_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gwse/engine.hpp"
#include "gwse/oracle.hpp"

namespace gwse {

enum ExitCode : int {
    exit_ok = 0,
    exit_false = 1,    // synthesis returned False / verification failed
    exit_input = 2,    // unreadable or invalid input
    exit_refused = 3,  // oracle bound exceeded
};

struct CliConfig
{
    std::string command;                 // synth | verify | solve | trace | export-dot
    std::string input;
    std::optional<std::string> output;
    std::optional<std::string> profile;  // profile document for verify / export-dot
    std::vector<int> coalition;
    std::vector<std::string> env;
    std::size_t bound = 2;               // strategy memory used by the oracle
    std::string format = "json";         // json | text
};

struct CliResult
{
    int code = exit_ok;
    std::string out;
    std::string err;
};

CliResult run_synth(const CliConfig& cfg);
CliResult run_verify(const CliConfig& cfg);
CliResult run_solve(const CliConfig& cfg);
CliResult run_trace(const CliConfig& cfg);
CliResult run_export_dot(const CliConfig& cfg);

/// Dispatches on cfg.command and writes `out` to cfg.output when given.
CliResult run(const CliConfig& cfg);

/// Parses argv with CLI11 and runs; returns the process exit code.
int cli_main(int argc, char** argv);

// Document helpers, exposed for tests.
nlohmann::ordered_json profile_to_json(const Game& game, const SpecProfile& profile,
                                       const std::vector<FiniteMemoryStrategy>& strategies);
SpecProfile profile_from_json(const Game& game, const nlohmann::json& doc);
nlohmann::ordered_json strategy_to_json(const GameGraph& g, const FiniteMemoryStrategy& s);
nlohmann::ordered_json trace_to_json(const GameGraph& g, const SynthesisTrace& trace, bool success);
nlohmann::ordered_json report_to_json(const GameGraph& g, const GwseReport& report);
std::string export_dot(const Game& game, const std::optional<SpecProfile>& profile);

} // namespace gwse

#endif
