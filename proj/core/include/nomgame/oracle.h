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

#ifndef NOMGAME_ORACLE_H_
#define NOMGAME_ORACLE_H_

// Brute-force equilibrium search on discretized platform grids.
//
// Stages 2 and 3 (endorsement and vote) are solved exactly for every
// platform profile. Stage 1 is searched on finite grids: the oracle keeps a
// profile only if no politician has a strictly profitable unilateral grid
// deviation. Limit constructions are replaced by an explicit epsilon that is
// injected into the grids.
//
// Two timings are supported for the left insider. kSequential lets l's
// offer respond to R's endorsement (l best-responds in each subgame);
// kSimultaneous treats l's offer as a stage-1 choice fixed before R endorses.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nomgame/closed_form.h"
#include "nomgame/model.h"

namespace nomgame {

inline constexpr double kDefaultOracleEpsilon = 1e-6;

class GridError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class LeftTiming { kSequential, kSimultaneous };

struct GridSpec {
  double policy_lo = -2.0;
  double policy_hi = 2.0;
  int policy_steps = 201;
  double rent_hi = 4.0;
  int rent_steps = 101;
  double epsilon = kDefaultOracleEpsilon;
  std::vector<double> critical_points;  // policies, injected with +-epsilon
  std::vector<double> critical_rents;   // rents, injected with small eps shifts

  LeftTiming timing = LeftTiming::kSequential;
  double tie_eps = kDefaultTieEps;
  bool outsider_null_only = false;  // restrict o's strategy set to {(0,0)}
  int max_rounds = 500;             // best-response rounds per start
  std::size_t exhaustive_limit = 20000;  // enumerate all profiles below this

  double PolicyStep() const;
  double RentStep() const;
  // Agreement tolerance: coarser step plus epsilon.
  double Tolerance() const;
};

// Throws GridError naming the violated requirement.
void ValidateGrid(const GridSpec& grid);

// Bounds that contain every tabulated equilibrium value, plus all critical
// policies and rents for `params`.
GridSpec DefaultGrid(const ModelParams& params,
                     double epsilon = kDefaultOracleEpsilon,
                     int policy_steps = 201, int rent_steps = 101);

struct StrategyGrids {
  std::vector<double> left_policies;   // sorted, all <= 0, contains 0
  std::vector<double> right_policies;  // sorted, all >= 0, contains 0
  std::vector<double> rents;           // sorted, all >= 0, contains 0
};

StrategyGrids BuildStrategyGrids(const GridSpec& grid);

// Stage 3: sincere vote of the median voter.
ElectionResult BestVote(const MatchTicket& left, const MatchTicket& right,
                        const ModelParams& params,
                        double tie_eps = kDefaultTieEps);

struct Endorsement {
  Politician nominee = Politician::kR;
  ElectionResult result;
  double utility_with_r = 0.0;
  std::optional<double> utility_with_o;
};

// Stage 2: R compares its expected utility of running r and of running o,
// given the left offer that each choice would face. Ties go to the insider.
// Without an outsider offer R runs r.
Endorsement BestEndorsement(const Platform& offer_r,
                            const std::optional<Platform>& offer_o,
                            const Platform& left_vs_r,
                            const Platform& left_vs_o,
                            const ModelParams& params,
                            double tie_eps = kDefaultTieEps);

inline Endorsement BestEndorsement(const Platform& offer_r,
                                   const std::optional<Platform>& offer_o,
                                   const Platform& offer_l,
                                   const ModelParams& params,
                                   double tie_eps = kDefaultTieEps) {
  return BestEndorsement(offer_r, offer_o, offer_l, offer_l, params, tie_eps);
}

struct OracleEquilibrium {
  Platform offer_l;           // l's offer on the realized ballot
  Platform offer_l_off_path;  // l's offer had R endorsed the other politician
  Platform offer_r;
  std::optional<Platform> offer_o;
  Politician nominee = Politician::kR;
  ElectionResult result;
  bool certified = false;
};

std::string ToString(const OracleEquilibrium& eq);

// Seed profile for the best-response search. Values are snapped to the grid.
struct StartProfile {
  Platform offer_l;
  Platform offer_r;
  std::optional<Platform> offer_o;
};

StartProfile StartFromOutcome(const EquilibriumOutcome& outcome);

// All certified pure profiles found on the grid. Small grids are enumerated
// exhaustively; larger ones are searched by best-response iteration from
// several seeds (null offers, bliss points, party bliss point, plus
// `extra_starts`). Among payoff-equivalent offers the null platform is kept.
// An empty result means no pure equilibrium was found on this grid.
std::vector<OracleEquilibrium> FindStage1Equilibria(
    GameKind game, const ModelParams& params, const GridSpec& grid,
    std::span<const StartProfile> extra_starts = {});

// Re-checks every unilateral grid deviation of an equilibrium profile.
bool RecheckEquilibrium(GameKind game, const ModelParams& params,
                        const GridSpec& grid, const OracleEquilibrium& eq);

struct GameVerification {
  GameKind game = GameKind::kInsiderOnly;
  EquilibriumOutcome claimed;
  std::vector<OracleEquilibrium> equilibria;
  std::optional<std::size_t> matched;  // index into equilibria
  double tolerance = 0.0;
  bool winner_agrees = false;
  double policy_error = 0.0;  // of the closest equilibrium with same winner
  double rent_error = 0.0;
  std::vector<std::string> discrepancies;

  bool agrees() const { return discrepancies.empty(); }
};

struct VerificationReport {
  ModelParams params;
  std::vector<GameVerification> games;

  bool agrees() const;
};

// Checks a claimed outcome against the oracle: agreement means some
// certified grid equilibrium has the same winning match and winning
// policy/rent within grid.Tolerance().
GameVerification VerifyOutcome(GameKind game, const ModelParams& params,
                               const GridSpec& grid,
                               const EquilibriumOutcome& claimed);

// Solves both games in closed form and verifies each against the oracle.
VerificationReport VerifyClosedForm(const ModelParams& params,
                                    const GridSpec& grid);

}  // namespace nomgame

#endif  // NOMGAME_ORACLE_H_
