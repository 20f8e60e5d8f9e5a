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

#ifndef NOMGAME_ANALYSIS_H_
#define NOMGAME_ANALYSIS_H_

// Comparative statics between the insider-only game and the game with an
// outsider: policy polarization, median-voter welfare and party-R welfare.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nomgame/closed_form.h"
#include "nomgame/model.h"

namespace nomgame {

enum class Effect { kNegative, kNull, kPositive };
enum class Polarization { kMoreCentrist, kUnchanged, kMoreExtreme };

std::string_view ToString(Effect effect);
std::string_view ToString(Polarization polarization);

struct WelfareComparison {
  double u_median_insider = 0.0;
  double u_median_outsider = 0.0;
  double u_partyR_insider = 0.0;
  double u_partyR_outsider = 0.0;
  double policy_insider = 0.0;  // expected winning policy
  double policy_outsider = 0.0;
  Effect voter_effect = Effect::kNull;
  Effect party_effect = Effect::kNull;
  Polarization polarization_effect = Polarization::kUnchanged;
  CaseLabel case_insider;
  CaseLabel case_outsider;
};

// Negative iff the insider-only value exceeds the outsider value by more
// than tie_eps; Null within the band.
Effect ClassifyEffect(double insider_value, double outsider_value,
                      double tie_eps);

WelfareComparison CompareGames(const ModelParams& params,
                               double tie_eps = kDefaultTieEps);

// Welfare-reducing conditions listed for cases 6, 9, 10 and 11, plus the
// party condition listed under case 11.
enum class VoterWelfareTag { kCase6, kCase9, kCase10, kCase11 };

std::string_view ToString(VoterWelfareTag tag);

struct WelfareConditions {
  std::optional<VoterWelfareTag> voter;
  bool party_case11 = false;

  bool any() const { return voter.has_value() || party_case11; }
  // "C-Case11|C-Case11-party", or "none".
  std::string ToString() const;
};

WelfareConditions WelfareReductionCondition(const ModelParams& params,
                                            double tie_eps = kDefaultTieEps);

// Sweep axes: any ModelParams field, or the derived V_r / V_o. Derived axes
// keep the affect factors and nu_l fixed and solve for nu_r (resp. nu_o).
struct Axis {
  std::string field;
  double lo = 0.0;
  double hi = 0.0;
  int steps = 1;

  double Value(int i) const;  // steps == 1 yields lo
};

// Throws ModelError for unknown fields and for values that cannot be
// realized (e.g. a V_r that needs a negative valence).
ModelParams ApplyAxis(ModelParams params, std::string_view field,
                      double value);

bool IsAxisField(std::string_view field);

struct RegionCell {
  double value1 = 0.0;
  double value2 = 0.0;
  bool feasible = false;
  std::string infeasible_reason;
  std::optional<WelfareComparison> comparison;
  std::optional<EquilibriumOutcome> outsider_outcome;
  WelfareConditions tags;
};

struct RegionMap {
  Axis axis1;
  Axis axis2;
  std::vector<RegionCell> cells;  // row-major, axis1 outer
};

RegionMap Sweep(const ModelParams& base, const Axis& axis1, const Axis& axis2,
                double tie_eps = kDefaultTieEps);

enum class VoterPreference { kLeft, kRight, kIndifferent };

std::string_view ToString(VoterPreference preference);

// X > V: L preferred; X < V: R preferred; |X - V| <= tie_eps: indifferent.
VoterPreference ClassifyPreference(double V, double X,
                                   double tie_eps = kDefaultTieEps);

struct PreferenceCell {
  double V = 0.0;
  double X = 0.0;
  VoterPreference preference = VoterPreference::kIndifferent;
};

// resolution x resolution cells over [lo, hi]^2 in the (V, X) plane,
// V outer.
std::vector<PreferenceCell> MedianVoterIndifferenceRegion(
    int resolution, double lo = -1.0, double hi = 1.0,
    double tie_eps = kDefaultTieEps);

}  // namespace nomgame

#endif  // NOMGAME_ANALYSIS_H_
