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


#ifndef NOMGAME_TOOLS_CONFIG_H_
#define NOMGAME_TOOLS_CONFIG_H_

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nomgame/analysis.h"
#include "nomgame/model.h"
#include "nomgame/oracle.h"

namespace nomgame::cli {

// Any problem with the configuration; maps to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { kCsv, kJson };

struct RunConfig {
  ModelParams params{.nu_l = 1.0, .nu_r = 1.0, .nu_o = 1.0};
  int policy_steps = 201;
  int rent_steps = 101;
  double epsilon = kDefaultOracleEpsilon;
  double tie_eps = kDefaultTieEps;
  LeftTiming timing = LeftTiming::kSequential;
  std::optional<Format> format;  // unset: the command's default
  std::string out;               // empty: stdout
  std::uint64_t seed = 1;
  int samples = 0;  // random draws for verify; 0 runs the table fixtures
  std::string axis1 = "V_r:-1:1:21";
  std::string axis2 = "V_o:-1:1:21";

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

// Every key a config file may contain, in dump order.
const std::vector<std::string>& ConfigKeys();

// Sets one key from its textual value. Throws ConfigError.
void SetKey(RunConfig& config, const std::string& key,
            const std::string& value);

// Key -> location ("run.yaml:4", "--set k_l=0.2") used in error messages.
using Locations = std::map<std::string, std::string>;

// Parses a flat YAML mapping. All ten model parameters are required.
// Errors carry "<path>:<line>:" prefixes.
RunConfig ParseConfigText(const std::string& text,
                          const std::string& path = "<config>",
                          Locations* where = nullptr);
RunConfig LoadConfigFile(const std::string& path, Locations* where = nullptr);

// Applies a "key=value" override.
void ApplyOverride(RunConfig& config, const std::string& assignment,
                   Locations* where = nullptr);

// Validates the model parameters and the grid settings.
void ValidateConfig(const RunConfig& config, const Locations& where = {});

// Flat YAML that parses back to an identical RunConfig.
std::string DumpConfig(const RunConfig& config);

GridSpec MakeGrid(const RunConfig& config, const ModelParams& params);

// "field:lo:hi:steps".
Axis ParseAxis(const std::string& text);
std::string FormatAxis(const Axis& axis);

}  // namespace nomgame::cli

#endif  // NOMGAME_TOOLS_CONFIG_H_
