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

#ifndef NOMGAME_MODEL_H_
#define NOMGAME_MODEL_H_

// Primitives of the nomination-and-election game: parameters, platforms,
// ballot tickets, the three utility functions and the election rule.
//
// Conventions: the median voter sits at 0. Party L always runs its insider
// l; party R runs either its insider r or the outsider o. Policies of l are
// non-positive, policies of r and o non-negative. Only o may ask for rent.

#include <stdexcept>
#include <string>
#include <string_view>

namespace nomgame {

inline constexpr double kDefaultTieEps = 1e-9;

// Raised for invalid parameters or structurally invalid tickets. The message
// names the violated invariant, e.g. "k_l < 0".
class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Party { kL, kR };
enum class Politician { kL, kR, kO };

std::string_view ToString(Party party);
std::string_view ToString(Politician politician);

struct ModelParams {
  double b_L = -1.0;
  double b_R = 1.0;
  double alpha_L = 1.0;
  double alpha_R = 1.0;
  double k_l = -0.5;
  double k_r = 0.5;
  double k_o = 0.5;
  double nu_l = 0.0;
  double nu_r = 0.0;
  double nu_o = 0.0;

  // Relative valence advantage of R when it runs r, resp. o.
  double V_r() const { return alpha_R * nu_r - alpha_L * nu_l; }
  double V_o() const { return nu_o - alpha_L * nu_l; }

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

// Throws ModelError naming the first violated invariant.
void Validate(const ModelParams& params);

struct Platform {
  double policy = 0.0;
  double rent = 0.0;

  static constexpr Platform Null() { return {}; }
  friend bool operator==(const Platform&, const Platform&) = default;
};

struct MatchTicket {
  Party party = Party::kL;
  Politician candidate = Politician::kL;
  Platform platform;

  friend bool operator==(const MatchTicket&, const MatchTicket&) = default;
};

MatchTicket LeftTicket(double policy);
MatchTicket InsiderTicket(double policy);
MatchTicket OutsiderTicket(Platform platform);

// Checks party/candidate pairing, side constraints and rent rules.
void ValidateTicket(const MatchTicket& ticket);

// Outcome of the vote. Both tickets on the ballot are always recorded; a
// lottery is an equal-probability coin flip between them.
class ElectionResult {
 public:
  enum class Kind { kLeftWins, kRightWins, kLottery };

  ElectionResult(Kind kind, MatchTicket left, MatchTicket right);

  Kind kind() const { return kind_; }
  bool is_lottery() const { return kind_ == Kind::kLottery; }
  const MatchTicket& left() const { return left_; }
  const MatchTicket& right() const { return right_; }

  // Winning ticket of a decisive result. Throws std::logic_error on lotteries.
  const MatchTicket& winner() const;
  const MatchTicket& loser() const;

  // Expectations over the coin flip; plain values for decisive results.
  double ExpectedPolicy() const;
  double ExpectedRent() const;

  // Probability that `who` is elected (0, 0.5 or 1).
  double WinProbability(Politician who) const;

  friend bool operator==(const ElectionResult&,
                         const ElectionResult&) = default;

 private:
  Kind kind_;
  MatchTicket left_;
  MatchTicket right_;
};

std::string ToString(const ElectionResult& result);

// Voter utility -|x_P| + alpha_P * nu_c, with alpha fixed to 1 for o.
double MedianUtility(const MatchTicket& ticket, const ModelParams& params);

// Party utility: -|x - b| - m when its accepted offer wins, otherwise
// -|y - b| for the winning policy y.
double PartyUtility(Party party, const Platform& accepted, bool won,
                    double winning_policy, const ModelParams& params);

// Politician utility: -|x - k| + m when accepted and elected, otherwise
// -|y - k|. Rejection and defeat are payoff-identical.
double PoliticianUtility(Politician who, const Platform& own_platform,
                         bool accepted, bool won, double winning_policy,
                         const ModelParams& params);

// Expected utilities over an election result (lottery branches averaged).
double ExpectedMedianUtility(const ElectionResult& result,
                             const ModelParams& params);
double ExpectedPartyUtility(Party party, const ElectionResult& result,
                            const ModelParams& params);
double ExpectedPoliticianUtility(Politician who, const ElectionResult& result,
                                 const ModelParams& params);

struct RelativeQuantities {
  double X = 0.0;  // |x_R| - |x_L|
  double V = 0.0;  // V_r or V_o, matching the candidate
};

RelativeQuantities ComputeRelativeQuantities(double x_L, double x_R,
                                             Politician candidate,
                                             const ModelParams& params);

// Relative valence advantage for R's candidate.
double ValenceAdvantage(Politician candidate, const ModelParams& params);

// X > V: L wins, X < V: R wins, |X - V| <= tie_eps: lottery.
ElectionResult ResolveElection(const MatchTicket& left,
                               const MatchTicket& right,
                               const ModelParams& params,
                               double tie_eps = kDefaultTieEps);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool Contains(double x) const { return lo <= x && x <= hi; }
  bool IsPoint() const { return lo == hi; }
};

// Policies that win against the most centrist opponent, as closed intervals
// (limit convention at the boundary). For V >= 0 R wins on [0, V] and L
// accepts (-inf, 0]; for V < 0 L wins on [V, 0] and R accepts [0, inf).
struct WinningRange {
  Party advantaged = Party::kR;
  Interval winning;
  Interval accepted_by_other;
};

WinningRange WinningPolicyRange(double valence_advantage);

}  // namespace nomgame

#endif  // NOMGAME_MODEL_H_
