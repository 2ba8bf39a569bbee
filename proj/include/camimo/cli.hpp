// SPDX-License-Identifier: Apache-2.0
//
// camimo: link-level simulation and analysis toolkit for cache-aided
// massive MIMO downlink
// Copyright (C) 2026 the camimo authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef CAMIMO_CLI_HPP
#define CAMIMO_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace camimo::cli
{

inline constexpr const char* k_tool_version = "1.0.0";

/// Exit codes reported by run_with_exit_codes().
enum ExitCode : int
{
    exit_ok = 0,
    exit_config_error = 2,
    exit_infeasible = 3,
    exit_numerical = 4
};

/// Usage or configuration problem (unknown key, malformed grid, refusing
/// to overwrite without --force, ...). Maps to exit code 2.
class ConfigError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// One resolved invocation of the tool.
struct RunManifest
{
    std::string command;            ///< sweep-rho0 | sweep-cache | validate | optimize-xi | mc-rate
    std::string config_path;        ///< flat key=value file or a previously written manifest.json
    std::string output_dir = "out";
    std::optional<std::uint64_t> seed;   ///< overrides the config seed
    std::optional<long long> trials;     ///< overrides the config trial count
    std::optional<unsigned> threads;     ///< overrides the config worker count
    bool force = false;                  ///< allow overwriting existing outputs
    std::string format = "both";         ///< csv | json | both
    std::string dump_channel_path;       ///< mc-rate only: binary realization dump
};

/// Executes the command: writes results.csv / results.json (per format)
/// and manifest.json into output_dir, streaming human-readable progress to
/// `out`. Throws ConfigError, InfeasibleError or NumericalError on failure.
void run(const RunManifest& manifest, std::ostream& out);

/// run() wrapped into the documented exit-code contract; diagnostics go to
/// `err`. Never throws.
int run_with_exit_codes(const RunManifest& manifest, std::ostream& out, std::ostream& err) noexcept;

} // namespace camimo::cli

#endif
