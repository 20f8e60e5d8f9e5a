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

#ifndef NOMGAME_CLOSED_FORM_H_
#define NOMGAME_CLOSED_FORM_H_

// Exact equilibrium case analysis for the insider-only game (3 cases) and
// the game with an outsider (11 cases).
//
// Rents that are built as "indifference value minus epsilon" are reported
// at their limit, together with the acceptance direction the limit argument
// selects (the outsider is nominated in cases 3, 5 and 9).

#include <optional>
#include <stdexcept>
#include <string>

#include "nomgame/model.h"

namespace nomgame {

enum class GameKind { kInsiderOnly, kWithOutsider };

std::string_view ToString(GameKind game);

struct CaseLabel {
  GameKind game = GameKind::kInsiderOnly;
  int index = 0;

  std::string ToString() const;  // "InsiderOnly/1", "WithOutsider/11"
  friend bool operator==(const CaseLabel&, const CaseLabel&) = default;
};

// An unreachable combination of valence conditions was hit.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct EquilibriumOutcome {
  CaseLabel case_label;
  Platform offer_l;
  Platform offer_r;
  std::optional<Platform> offer_o;  // absent in the insider-only game
  ElectionResult result;
  double winning_policy = 0.0;  // expectation for lotteries
  double winning_rent = 0.0;    // expectation for lotteries
  std::optional<double> xbar;   // cases 9 and 10 only
};

CaseLabel ClassifyInsider(const ModelParams& params,
                          double tie_eps = kDefaultTieEps);
EquilibriumOutcome SolveInsider(const ModelParams& params,
                                double tie_eps = kDefaultTieEps);

// First matching row of the case table wins; equalities use tie_eps.
// Throws ConsistencyError if no row matches.
CaseLabel ClassifyOutsider(const ModelParams& params,
                           double tie_eps = kDefaultTieEps);
EquilibriumOutcome SolveOutsider(const ModelParams& params,
                                 double tie_eps = kDefaultTieEps);

EquilibriumOutcome Solve(GameKind game, const ModelParams& params,
                         double tie_eps = kDefaultTieEps);

// (min{b_R, V_r} + min{b_R, V_o}) / 2.
double Xbar(const ModelParams& params);

// Alternative case-9 rent with min{k_o, V_o} in the second term, as written
// in one derivation of the result. Kept for comparison against the oracle.
double CaseNineRentKoVariant(const ModelParams& params);

// Insider policy that is a best response under the case-10 conditions:
// closest to k_r among policies that win the election and beat the
// outsider's best offer min{b_R, V_o}. Equals the tabulated min{b_R, V_r}
// only when V_r <= k_r and V_r < b_R; used to flag the gap.
double CaseTenInsiderBestResponse(const ModelParams& params);

// Distance of `params` from the nearest boundary between case regions,
// measured on the quantities the classification compares (V_r, V_o, the
// midpoint thresholds, b_R and xbar).
double CaseBoundaryDistance(GameKind game, const ModelParams& params);

}  // namespace nomgame

#endif  // NOMGAME_CLOSED_FORM_H_
