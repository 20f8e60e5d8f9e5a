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

#include "nomgame/oracle.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "nomgame/closed_form.h"
#include "nomgame/fixtures.h"

namespace nomgame {
namespace {

const ModelParams& FixtureParams(const std::string& name) {
  for (const Fixture& f : TableFixtures()) {
    if (f.name == name) return f.params;
  }
  throw std::out_of_range(name);
}

TEST(BestVoteTest, NullPlatformsWithZeroAdvantageTie) {
  const ModelParams p = MakeParams(0.0, 0.0, -0.5, 0.5, 0.5, 1.0);
  const ElectionResult r =
      BestVote(LeftTicket(0.0), InsiderTicket(0.0), p);
  EXPECT_TRUE(r.is_lottery());
}

TEST(BestVoteTest, ChallengerJustInsideAdvantageWins) {
  const ModelParams p = MakeParams(0.4, 0.0, -0.5, 0.5, 0.5, 1.0);
  const GridSpec grid = DefaultGrid(p);
  const ElectionResult r = BestVote(
      LeftTicket(0.0), InsiderTicket(p.V_r() - grid.PolicyStep()), p);
  EXPECT_EQ(r.kind(), ElectionResult::Kind::kRightWins);
}

TEST(BestVoteTest, DelegatesToElectionRule) {
  const ModelParams p = MakeParams(0.3, 0.1, -0.5, 0.5, 0.5, 1.0);
  for (double xl : {-0.6, -0.2, 0.0}) {
    for (double xr : {0.0, 0.1, 0.5, 0.9}) {
      EXPECT_EQ(BestVote(LeftTicket(xl), InsiderTicket(xr), p),
                ResolveElection(LeftTicket(xl), InsiderTicket(xr), p));
    }
  }
}

TEST(BestEndorsementTest, WinningOutsiderBeatsLosingInsider) {
  const ModelParams p = MakeParams(-0.5, 0.5, -0.3, 0.5, 0.3, 1.0);
  const Endorsement e =
      BestEndorsement({0.0, 0.0}, Platform{0.2, 0.1}, {-0.2, 0.0}, p);
  EXPECT_EQ(e.nominee, Politician::kO);
  EXPECT_EQ(e.result.kind(), ElectionResult::Kind::kRightWins);
  EXPECT_NEAR(e.utility_with_r, -1.2, 1e-12);
  EXPECT_NEAR(*e.utility_with_o, -0.9, 1e-12);
}

TEST(BestEndorsementTest, IdenticalNullOffersGoToInsider) {
  const ModelParams p = MakeParams(0.2, 0.2, -0.3, 0.5, 0.3, 1.0);
  const Endorsement e =
      BestEndorsement(Platform::Null(), Platform::Null(), Platform::Null(), p);
  EXPECT_EQ(e.nominee, Politician::kR);
}

TEST(BestEndorsementTest, AcceptanceFlipsAtIndifferenceRent) {
  const ModelParams& p = FixtureParams("outsider-5");
  const Platform left{-0.1, 0.0};
  EXPECT_EQ(BestEndorsement(Platform::Null(), Platform{0.3, 0.41}, left, p)
                .nominee,
            Politician::kR);
  EXPECT_EQ(BestEndorsement(Platform::Null(), Platform{0.3, 0.39}, left, p)
                .nominee,
            Politician::kO);
  EXPECT_EQ(BestEndorsement(Platform::Null(), Platform{0.3, 0.4 - 1e-6},
                            left, p)
                .nominee,
            Politician::kO);
}

TEST(BestEndorsementTest, WithoutOutsiderOfferRunsInsider) {
  const ModelParams p = MakeParams(-0.5, 0.5, -0.3, 0.5, 0.3, 1.0);
  EXPECT_EQ(BestEndorsement(Platform::Null(), std::nullopt, Platform::Null(),
                            p)
                .nominee,
            Politician::kR);
}

TEST(GridTest, RejectsInfeasibleGrids) {
  GridSpec g;
  g.policy_steps = 1;
  EXPECT_THROW(ValidateGrid(g), GridError);
  g = GridSpec{};
  g.policy_lo = 0.5;
  EXPECT_THROW(ValidateGrid(g), GridError);
  g = GridSpec{};
  g.epsilon = 0.0;
  EXPECT_THROW(ValidateGrid(g), GridError);
  g = GridSpec{};
  g.tie_eps = g.epsilon;
  EXPECT_THROW(ValidateGrid(g), GridError);
  const ModelParams p = MakeParams(0.0, 0.0, -0.5, 0.5, 0.5, 1.0);
  EXPECT_THROW(FindStage1Equilibria(GameKind::kWithOutsider, p, g), GridError);
}

TEST(GridTest, ErrorNamesRequirement) {
  GridSpec g;
  g.rent_steps = 0;
  try {
    ValidateGrid(g);
    FAIL();
  } catch (const GridError& e) {
    EXPECT_NE(std::string(e.what()).find("rent_steps >= 2"),
              std::string::npos);
  }
}

TEST(GridTest, DefaultGridContainsCriticalPoints) {
  const ModelParams& p = FixtureParams("outsider-6");
  const GridSpec g = DefaultGrid(p);
  const StrategyGrids s = BuildStrategyGrids(g);
  auto has = [](const std::vector<double>& v, double x) {
    return std::binary_search(v.begin(), v.end(), x);
  };
  EXPECT_TRUE(has(s.left_policies, 0.0));
  EXPECT_TRUE(has(s.right_policies, 0.0));
  EXPECT_TRUE(has(s.rents, 0.0));
  EXPECT_TRUE(has(s.left_policies, p.k_l));
  EXPECT_TRUE(has(s.right_policies, p.k_o));
  EXPECT_TRUE(has(s.right_policies, p.b_R));
  EXPECT_TRUE(has(s.right_policies, 2.0 * p.b_R - std::max(p.k_l, p.V_r())));
  EXPECT_TRUE(std::is_sorted(s.rents.begin(), s.rents.end()));
  EXPECT_LE(g.policy_lo, std::min({p.k_l, p.V_r(), p.V_o()}));
  EXPECT_GE(g.policy_hi, std::max({p.k_r, p.k_o, p.b_R, p.V_r(), p.V_o()}));
}

TEST(FindStage1Test, InsiderCaseOneWinningPolicy) {
  const ModelParams& p = FixtureParams("insider-1");
  const GridSpec g = DefaultGrid(p);
  const auto eqs = FindStage1Equilibria(GameKind::kInsiderOnly, p, g);
  ASSERT_FALSE(eqs.empty());
  bool found = false;
  for (const OracleEquilibrium& eq : eqs) {
    if (eq.result.kind() != ElectionResult::Kind::kLeftWins) continue;
    found |= std::abs(eq.result.winner().platform.policy - (-0.3)) <=
             g.PolicyStep();
  }
  EXPECT_TRUE(found);
}

TEST(FindStage1Test, CaseFiveWinningRent) {
  const ModelParams& p = FixtureParams("outsider-5");
  const GridSpec g = DefaultGrid(p);
  const auto eqs = FindStage1Equilibria(GameKind::kWithOutsider, p, g);
  ASSERT_FALSE(eqs.empty());
  bool found = false;
  for (const OracleEquilibrium& eq : eqs) {
    if (eq.result.kind() != ElectionResult::Kind::kRightWins ||
        eq.result.winner().candidate != Politician::kO) {
      continue;
    }
    const Platform& w = eq.result.winner().platform;
    found |= std::abs(w.rent - (0.4 - g.epsilon)) <= g.RentStep() &&
             std::abs(w.policy - 0.3) <= g.PolicyStep();
  }
  EXPECT_TRUE(found);
}

TEST(FindStage1Test, DegenerateGridCertifiesNullProfile) {
  const ModelParams p = MakeParams(0.3, 0.2, -0.5, 0.5, 0.5, 1.0);
  GridSpec g;
  g.policy_lo = 0.0;
  g.policy_hi = 0.0;
  g.rent_hi = 0.0;
  for (GameKind game : {GameKind::kInsiderOnly, GameKind::kWithOutsider}) {
    const auto eqs = FindStage1Equilibria(game, p, g);
    ASSERT_EQ(eqs.size(), 1u);
    EXPECT_TRUE(eqs[0].certified);
    EXPECT_EQ(eqs[0].offer_l, Platform::Null());
    EXPECT_EQ(eqs[0].offer_r, Platform::Null());
    if (game == GameKind::kWithOutsider) {
      EXPECT_EQ(eqs[0].offer_o, Platform::Null());
    }
  }
}

TEST(FindStage1Test, SimultaneousTimingRuns) {
  const ModelParams& p = FixtureParams("insider-3");
  GridSpec g = DefaultGrid(p, kDefaultOracleEpsilon, 41, 21);
  g.timing = LeftTiming::kSimultaneous;
  const auto eqs = FindStage1Equilibria(GameKind::kInsiderOnly, p, g);
  for (const OracleEquilibrium& eq : eqs) {
    EXPECT_TRUE(RecheckEquilibrium(GameKind::kInsiderOnly, p, g, eq));
  }
}

class OracleDrawTest : public ::testing::Test {
 protected:
  std::vector<ModelParams> Draws(int n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::vector<ModelParams> out;
    for (int i = 0; i < n; ++i) out.push_back(RandomParams(rng));
    return out;
  }
};

TEST_F(OracleDrawTest, EveryReturnedEquilibriumSurvivesRecheck) {
  for (const ModelParams& p : Draws(8, 11)) {
    const GridSpec g = DefaultGrid(p, kDefaultOracleEpsilon, 61, 31);
    for (GameKind game : {GameKind::kInsiderOnly, GameKind::kWithOutsider}) {
      for (const OracleEquilibrium& eq : FindStage1Equilibria(game, p, g)) {
        EXPECT_TRUE(eq.certified);
        EXPECT_TRUE(RecheckEquilibrium(game, p, g, eq)) << ToString(eq);
      }
    }
  }
}

TEST_F(OracleDrawTest, EndorsementIsRationalForParty) {
  for (const ModelParams& p : Draws(8, 12)) {
    const GridSpec g = DefaultGrid(p, kDefaultOracleEpsilon, 61, 31);
    for (const OracleEquilibrium& eq :
         FindStage1Equilibria(GameKind::kWithOutsider, p, g)) {
      ASSERT_TRUE(eq.offer_o.has_value());
      const bool chose_r = eq.nominee == Politician::kR;
      const MatchTicket other =
          chose_r ? OutsiderTicket(*eq.offer_o)
                  : InsiderTicket(eq.offer_r.policy);
      const ElectionResult alternative =
          BestVote(LeftTicket(eq.offer_l_off_path.policy), other, p);
      EXPECT_GE(ExpectedPartyUtility(Party::kR, eq.result, p),
                ExpectedPartyUtility(Party::kR, alternative, p) - 1e-12)
          << ToString(eq);
    }
  }
}

std::set<std::string> Outcomes(const std::vector<OracleEquilibrium>& eqs) {
  std::set<std::string> out;
  for (const OracleEquilibrium& eq : eqs) out.insert(ToString(eq.result));
  return out;
}

TEST_F(OracleDrawTest, NullOutsiderReproducesInsiderGame) {
  int checked = 0;
  for (ModelParams p : Draws(80, 13)) {
    // A null outsider always loses here and r never overshoots b_R, so R
    // has no reason to use the outsider as an outside option.
    if (!(p.V_o() < 0.0 && p.V_o() <= p.V_r() && p.k_r <= p.b_R)) continue;
    ++checked;
    GridSpec g = DefaultGrid(p, kDefaultOracleEpsilon, 61, 31);
    const auto insider = FindStage1Equilibria(GameKind::kInsiderOnly, p, g);
    g.outsider_null_only = true;
    const auto restricted =
        FindStage1Equilibria(GameKind::kWithOutsider, p, g);
    EXPECT_EQ(Outcomes(insider), Outcomes(restricted));
  }
  EXPECT_GT(checked, 3);
}

double MatchedError(GameKind game, const ModelParams& p, int steps) {
  const GridSpec g = DefaultGrid(p, kDefaultOracleEpsilon, steps, steps);
  const GameVerification v = VerifyOutcome(game, p, g, Solve(game, p));
  if (!v.winner_agrees) return std::numeric_limits<double>::infinity();
  return std::max(v.policy_error, v.rent_error);
}

TEST(RefinementTest, HalvingStepDoesNotIncreaseDiscrepancy) {
  for (const Fixture& f : TableFixtures()) {
    double previous = std::numeric_limits<double>::infinity();
    for (int steps : {26, 51, 101, 201}) {
      const double e = MatchedError(f.expected.game, f.params, steps);
      EXPECT_LE(e, previous + 1e-9) << f.name << " steps=" << steps;
      previous = e;
    }
  }
}

TEST(VerifyTest, AllFixturesAgree) {
  for (const Fixture& f : TableFixtures()) {
    const GridSpec g = DefaultGrid(f.params);
    const GameVerification v = VerifyOutcome(
        f.expected.game, f.params, g, Solve(f.expected.game, f.params));
    EXPECT_TRUE(v.agrees()) << f.name << ": "
                            << (v.discrepancies.empty()
                                    ? ""
                                    : v.discrepancies.front());
    EXPECT_LE(v.policy_error, v.tolerance);
    EXPECT_LE(v.rent_error, v.tolerance);
  }
}

TEST(VerifyTest, CaseNineRentWithinTolerance) {
  const ModelParams& p = FixtureParams("outsider-9");
  const GridSpec g = DefaultGrid(p);
  const GameVerification v =
      VerifyOutcome(GameKind::kWithOutsider, p, g, SolveOutsider(p));
  ASSERT_TRUE(v.agrees());
  EXPECT_LE(v.rent_error, g.epsilon + g.RentStep());
}

TEST(VerifyTest, CorruptedClaimIsReported) {
  const ModelParams& p = FixtureParams("outsider-5");
  const GridSpec g = DefaultGrid(p);
  EquilibriumOutcome bad = SolveOutsider(p);
  bad.winning_policy += 0.3;
  const GameVerification v =
      VerifyOutcome(GameKind::kWithOutsider, p, g, bad);
  EXPECT_FALSE(v.agrees());
  ASSERT_FALSE(v.discrepancies.empty());
  EXPECT_NE(v.discrepancies.front().find("policy error"), std::string::npos);
}

TEST(VerifyTest, ReportCoversBothGames) {
  const ModelParams& p = FixtureParams("insider-3");
  const VerificationReport r = VerifyClosedForm(p, DefaultGrid(p));
  ASSERT_EQ(r.games.size(), 2u);
  EXPECT_EQ(r.games[0].game, GameKind::kInsiderOnly);
  EXPECT_EQ(r.games[1].game, GameKind::kWithOutsider);
}

}  // namespace
}  // namespace nomgame
