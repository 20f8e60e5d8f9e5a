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

#include "nomgame/model.h"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <fmt/format.h>

namespace nomgame {

std::string_view ToString(Party party) {
  return party == Party::kL ? "L" : "R";
}

std::string_view ToString(Politician politician) {
  switch (politician) {
    case Politician::kL:
      return "l";
    case Politician::kR:
      return "r";
    case Politician::kO:
      return "o";
  }
  return "?";
}

namespace {

void Require(bool ok, const char* invariant) {
  if (!ok) throw ModelError(fmt::format("invariant violated: {}", invariant));
}

}  // namespace

void Validate(const ModelParams& p) {
  const double fields[] = {p.b_L, p.b_R,  p.alpha_L, p.alpha_R, p.k_l,
                           p.k_r, p.k_o,  p.nu_l,    p.nu_r,    p.nu_o};
  for (double v : fields) Require(std::isfinite(v), "all parameters finite");
  Require(p.b_L < 0.0, "b_L < 0");
  Require(p.b_R > 0.0, "b_R > 0");
  Require(p.k_l < 0.0, "k_l < 0");
  Require(p.k_r > 0.0, "k_r > 0");
  Require(p.k_o >= 0.0, "k_o >= 0");
  Require(p.alpha_L >= 0.0, "alpha_L >= 0");
  Require(p.alpha_R >= 0.0, "alpha_R >= 0");
  Require(p.nu_l >= 0.0, "nu_l >= 0");
  Require(p.nu_r >= 0.0, "nu_r >= 0");
  Require(p.nu_o >= 0.0, "nu_o >= 0");
}

MatchTicket LeftTicket(double policy) {
  return {Party::kL, Politician::kL, {policy, 0.0}};
}

MatchTicket InsiderTicket(double policy) {
  return {Party::kR, Politician::kR, {policy, 0.0}};
}

MatchTicket OutsiderTicket(Platform platform) {
  return {Party::kR, Politician::kO, platform};
}

void ValidateTicket(const MatchTicket& t) {
  if (t.party == Party::kL) {
    Require(t.candidate == Politician::kL, "party L runs candidate l");
    Require(t.platform.policy <= 0.0, "x_l <= 0");
  } else {
    Require(t.candidate != Politician::kL, "party R runs candidate r or o");
    Require(t.platform.policy >= 0.0, "x_r, x_o >= 0");
  }
  Require(t.platform.rent >= 0.0, "rent >= 0");
  Require(t.candidate == Politician::kO || t.platform.rent == 0.0,
          "m_l = m_r = 0");
}

ElectionResult::ElectionResult(Kind kind, MatchTicket left, MatchTicket right)
    : kind_(kind), left_(left), right_(right) {
  Require(left_.party == Party::kL, "left ticket belongs to party L");
  Require(right_.party == Party::kR, "right ticket belongs to party R");
}

const MatchTicket& ElectionResult::winner() const {
  if (kind_ == Kind::kLottery) {
    throw std::logic_error("lottery has no decisive winner");
  }
  return kind_ == Kind::kLeftWins ? left_ : right_;
}

const MatchTicket& ElectionResult::loser() const {
  if (kind_ == Kind::kLottery) {
    throw std::logic_error("lottery has no decisive loser");
  }
  return kind_ == Kind::kLeftWins ? right_ : left_;
}

double ElectionResult::ExpectedPolicy() const {
  switch (kind_) {
    case Kind::kLeftWins:
      return left_.platform.policy;
    case Kind::kRightWins:
      return right_.platform.policy;
    case Kind::kLottery:
      return 0.5 * (left_.platform.policy + right_.platform.policy);
  }
  return 0.0;
}

double ElectionResult::ExpectedRent() const {
  switch (kind_) {
    case Kind::kLeftWins:
      return left_.platform.rent;
    case Kind::kRightWins:
      return right_.platform.rent;
    case Kind::kLottery:
      return 0.5 * (left_.platform.rent + right_.platform.rent);
  }
  return 0.0;
}

double ElectionResult::WinProbability(Politician who) const {
  const bool on_left = left_.candidate == who;
  const bool on_right = right_.candidate == who;
  switch (kind_) {
    case Kind::kLeftWins:
      return on_left ? 1.0 : 0.0;
    case Kind::kRightWins:
      return on_right ? 1.0 : 0.0;
    case Kind::kLottery:
      return (on_left || on_right) ? 0.5 : 0.0;
  }
  return 0.0;
}

std::string ToString(const ElectionResult& result) {
  auto ticket = [](const MatchTicket& t) {
    return fmt::format("({},{},({:.12g},{:.12g}))", ToString(t.party),
                       ToString(t.candidate), t.platform.policy,
                       t.platform.rent);
  };
  switch (result.kind()) {
    case ElectionResult::Kind::kLeftWins:
      return "DecisiveWin" + ticket(result.left());
    case ElectionResult::Kind::kRightWins:
      return "DecisiveWin" + ticket(result.right());
    case ElectionResult::Kind::kLottery:
      return "Lottery[" + ticket(result.left()) + "," +
             ticket(result.right()) + "]";
  }
  return {};
}

double MedianUtility(const MatchTicket& ticket, const ModelParams& p) {
  ValidateTicket(ticket);
  double perceived = 0.0;
  switch (ticket.candidate) {
    case Politician::kL:
      perceived = p.alpha_L * p.nu_l;
      break;
    case Politician::kR:
      perceived = p.alpha_R * p.nu_r;
      break;
    case Politician::kO:
      perceived = p.nu_o;
      break;
  }
  return -std::abs(ticket.platform.policy) + perceived;
}

double PartyUtility(Party party, const Platform& accepted, bool won,
                    double winning_policy, const ModelParams& p) {
  const double bliss = party == Party::kL ? p.b_L : p.b_R;
  if (won) return -std::abs(accepted.policy - bliss) - accepted.rent;
  return -std::abs(winning_policy - bliss);
}

namespace {

double BlissOf(Politician who, const ModelParams& p) {
  switch (who) {
    case Politician::kL:
      return p.k_l;
    case Politician::kR:
      return p.k_r;
    case Politician::kO:
      return p.k_o;
  }
  return 0.0;
}

}  // namespace

double PoliticianUtility(Politician who, const Platform& own_platform,
                         bool accepted, bool won, double winning_policy,
                         const ModelParams& p) {
  const double bliss = BlissOf(who, p);
  if (accepted && won) {
    return -std::abs(own_platform.policy - bliss) + own_platform.rent;
  }
  return -std::abs(winning_policy - bliss);
}

namespace {

// Utility evaluated with `winner` in office.
double PartyBranch(Party party, const MatchTicket& winner,
                   const ModelParams& p) {
  return PartyUtility(party, winner.platform, winner.party == party,
                      winner.platform.policy, p);
}

double PoliticianBranch(Politician who, const MatchTicket& winner,
                        const ModelParams& p) {
  const bool elected = winner.candidate == who;
  return PoliticianUtility(who, winner.platform, elected, elected,
                           winner.platform.policy, p);
}

}  // namespace

double ExpectedMedianUtility(const ElectionResult& r, const ModelParams& p) {
  if (!r.is_lottery()) return MedianUtility(r.winner(), p);
  return 0.5 * (MedianUtility(r.left(), p) + MedianUtility(r.right(), p));
}

double ExpectedPartyUtility(Party party, const ElectionResult& r,
                            const ModelParams& p) {
  if (!r.is_lottery()) return PartyBranch(party, r.winner(), p);
  return 0.5 *
         (PartyBranch(party, r.left(), p) + PartyBranch(party, r.right(), p));
}

double ExpectedPoliticianUtility(Politician who, const ElectionResult& r,
                                 const ModelParams& p) {
  if (!r.is_lottery()) return PoliticianBranch(who, r.winner(), p);
  return 0.5 * (PoliticianBranch(who, r.left(), p) +
                PoliticianBranch(who, r.right(), p));
}

double ValenceAdvantage(Politician candidate, const ModelParams& p) {
  switch (candidate) {
    case Politician::kR:
      return p.V_r();
    case Politician::kO:
      return p.V_o();
    case Politician::kL:
      break;
  }
  throw ModelError("invariant violated: R's candidate is r or o");
}

RelativeQuantities ComputeRelativeQuantities(double x_L, double x_R,
                                             Politician candidate,
                                             const ModelParams& p) {
  return {std::abs(x_R) - std::abs(x_L), ValenceAdvantage(candidate, p)};
}

ElectionResult ResolveElection(const MatchTicket& left,
                               const MatchTicket& right, const ModelParams& p,
                               double tie_eps) {
  ValidateTicket(left);
  ValidateTicket(right);
  Require(left.party == Party::kL, "left ticket belongs to party L");
  Require(right.party == Party::kR, "right ticket belongs to party R");
  const RelativeQuantities q = ComputeRelativeQuantities(
      left.platform.policy, right.platform.policy, right.candidate, p);
  using Kind = ElectionResult::Kind;
  if (q.X > q.V + tie_eps) return {Kind::kLeftWins, left, right};
  if (q.X < q.V - tie_eps) return {Kind::kRightWins, left, right};
  return {Kind::kLottery, left, right};
}

WinningRange WinningPolicyRange(double v) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  if (v >= 0.0) return {Party::kR, {0.0, v}, {-kInf, 0.0}};
  return {Party::kL, {v, 0.0}, {0.0, kInf}};
}

}  // namespace nomgame
