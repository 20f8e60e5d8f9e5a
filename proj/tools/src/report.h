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


#ifndef NOMGAME_TOOLS_REPORT_H_
#define NOMGAME_TOOLS_REPORT_H_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nomgame/analysis.h"
#include "nomgame/closed_form.h"
#include "nomgame/model.h"
#include "nomgame/oracle.h"

namespace nomgame::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSweepHeader =
    "axis1,axis2,case_insider,case_outsider,winner,policy,rent,u_median_i,"
    "u_median_o,u_partyR_i,u_partyR_o,voter_effect,party_effect,"
    "polarization,welfare_tag";

// 12 significant digits.
std::string CsvReal(double v);

// "L-l", "R-o", "Lottery(L-l|R-r)".
std::string WinnerLabel(const ElectionResult& result);

Json ToJson(const ModelParams& params);
Json ToJson(const Platform& platform);
Json ToJson(const ElectionResult& result);
Json ToJson(const EquilibriumOutcome& outcome);
Json ToJson(const WelfareComparison& comparison);
Json ToJson(const OracleEquilibrium& equilibrium);
Json ToJson(const GameVerification& verification);

std::string SweepCsv(const RegionMap& map);
Json SweepJson(const RegionMap& map);

std::string RegionsCsv(const std::vector<PreferenceCell>& cells);
Json RegionsJson(const std::vector<PreferenceCell>& cells);

}  // namespace nomgame::cli

#endif  // NOMGAME_TOOLS_REPORT_H_
