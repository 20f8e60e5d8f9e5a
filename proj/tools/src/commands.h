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


#ifndef NOMGAME_TOOLS_COMMANDS_H_
#define NOMGAME_TOOLS_COMMANDS_H_

#include <optional>
#include <ostream>

#include "config.h"

namespace nomgame::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDiscrepancy = 1;
inline constexpr int kExitConfigError = 2;

struct VerifyOptions {
  // Verify the configured parameters instead of the table fixtures.
  bool single_instance = false;
  // Negative control: shift every claimed winning policy by this amount.
  std::optional<double> corrupt_policy;
};

// Each command writes its artifact to `out` and diagnostics to `err`, and
// returns the process exit status.
int RunSolve(const RunConfig& config, std::ostream& out, std::ostream& err);
int RunVerify(const RunConfig& config, const VerifyOptions& options,
              std::ostream& out, std::ostream& err);
int RunSweep(const RunConfig& config, std::ostream& out, std::ostream& err);
int RunRegions(const RunConfig& config, std::ostream& out, std::ostream& err);
int RunDumpConfig(const RunConfig& config, std::ostream& out);

}  // namespace nomgame::cli

#endif  // NOMGAME_TOOLS_COMMANDS_H_
