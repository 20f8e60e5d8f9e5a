// Copyright 2026 The nomgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Command-line front end: solve, verify, sweep, regions, dump-config.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.h"
#include "config.h"
#include "nomgame/closed_form.h"
#include "nomgame/model.h"
#include "nomgame/oracle.h"

namespace {

using nomgame::cli::ConfigError;
using nomgame::cli::RunConfig;

struct Flags {
  std::string config_path;
  std::vector<std::string> sets;
  std::optional<std::string> format;
  std::optional<std::string> out;
  std::optional<std::string> grid_steps;
  std::optional<std::string> epsilon;
  std::optional<std::string> tie_eps;
  std::optional<std::string> seed;
  std::optional<std::string> samples;
  std::optional<std::string> timing;
  std::optional<std::string> axis1;
  std::optional<std::string> axis2;
  std::optional<double> corrupt_policy;
};

bool IsModelKey(const std::string& assignment) {
  static const char* keys[] = {"b_L", "b_R", "alpha_L", "alpha_R", "k_l",
                               "k_r", "k_o", "nu_l",    "nu_r",    "nu_o"};
  const std::string key = assignment.substr(0, assignment.find('='));
  for (const char* k : keys) {
    if (key == k) return true;
  }
  return false;
}

RunConfig Resolve(const Flags& flags, nomgame::cli::Locations& where) {
  RunConfig config;
  if (!flags.config_path.empty()) {
    config = nomgame::cli::LoadConfigFile(flags.config_path, &where);
  }
  auto apply = [&](const std::optional<std::string>& value, const char* flag,
                   const char* key) {
    if (!value) return;
    const std::string at = std::string(flag) + " " + *value;
    try {
      nomgame::cli::SetKey(config, key, *value);
    } catch (const ConfigError& e) {
      throw ConfigError(at + ": " + e.what());
    }
    where[key] = at;
  };
  apply(flags.grid_steps, "--grid-steps", "policy_steps");
  apply(flags.epsilon, "--epsilon", "epsilon");
  apply(flags.tie_eps, "--tie-eps", "tie_eps");
  apply(flags.seed, "--seed", "seed");
  apply(flags.samples, "--samples", "samples");
  apply(flags.format, "--format", "format");
  apply(flags.out, "--out", "out");
  apply(flags.timing, "--timing", "timing");
  apply(flags.axis1, "--axis1", "axis1");
  apply(flags.axis2, "--axis2", "axis2");
  for (const std::string& s : flags.sets) {
    nomgame::cli::ApplyOverride(config, s, &where);
  }
  nomgame::cli::ValidateConfig(config, where);
  return config;
}

int Emit(const RunConfig& config, const std::string& text) {
  if (config.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return 0;
  }
  std::ofstream file(config.out, std::ios::binary);
  file << text;
  if (!file) {
    std::cerr << "error: cannot write " << config.out << "\n";
    return nomgame::cli::kExitConfigError;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nomination-and-election game solver and verifier", "nomgame"};
  app.require_subcommand(1);
  app.fallthrough();

  Flags flags;
  app.add_option("--config", flags.config_path, "flat YAML run configuration");
  app.add_option("--set", flags.sets, "key=value override (repeatable)");
  app.add_option("--format", flags.format, "csv or json");
  app.add_option("--out", flags.out, "output path (default stdout)");
  app.add_option("--grid-steps", flags.grid_steps,
                 "oracle policy grid points; cells per axis for regions");
  app.add_option("--epsilon", flags.epsilon, "oracle epsilon");
  app.add_option("--tie-eps", flags.tie_eps, "tie tolerance");
  app.add_option("--seed", flags.seed, "seed for randomized verification");
  app.add_option("--samples", flags.samples,
                 "number of random draws to verify (0: table fixtures)");
  app.add_option("--timing", flags.timing, "sequential or simultaneous");

  auto* solve =
      app.add_subcommand("solve", "closed-form equilibria of both games");
  auto* verify =
      app.add_subcommand("verify", "check closed forms against the oracle");
  verify->add_option("--corrupt-policy", flags.corrupt_policy,
                     "shift claimed winning policies (negative control)");
  auto* sweep = app.add_subcommand("sweep", "two-axis comparative statics map");
  sweep->add_option("--axis1", flags.axis1, "field:lo:hi:steps");
  sweep->add_option("--axis2", flags.axis2, "field:lo:hi:steps");
  auto* regions =
      app.add_subcommand("regions", "median voter preference regions");
  auto* dump =
      app.add_subcommand("dump-config", "print the resolved configuration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : nomgame::cli::kExitConfigError;
  }

  try {
    nomgame::cli::Locations where;
    const RunConfig config = Resolve(flags, where);
    std::ostringstream out;
    int status = 0;
    if (solve->parsed()) {
      status = nomgame::cli::RunSolve(config, out, std::cerr);
    } else if (verify->parsed()) {
      nomgame::cli::VerifyOptions options;
      options.corrupt_policy = flags.corrupt_policy;
      options.single_instance =
          !flags.config_path.empty() ||
          std::any_of(flags.sets.begin(), flags.sets.end(), IsModelKey);
      status = nomgame::cli::RunVerify(config, options, out, std::cerr);
    } else if (sweep->parsed()) {
      status = nomgame::cli::RunSweep(config, out, std::cerr);
    } else if (regions->parsed()) {
      status = nomgame::cli::RunRegions(config, out, std::cerr);
    } else if (dump->parsed()) {
      status = nomgame::cli::RunDumpConfig(config, out);
    }
    const int emitted = Emit(config, out.str());
    return emitted != 0 ? emitted : status;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const nomgame::ModelError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const nomgame::GridError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const nomgame::ConsistencyError& e) {
    std::cerr << "error: inconsistent case analysis: " << e.what() << "\n";
    return nomgame::cli::kExitDiscrepancy;
  }
  return nomgame::cli::kExitConfigError;
}
