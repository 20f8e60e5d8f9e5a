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

#include <random>

#include <gtest/gtest.h>

namespace nomgame {
namespace {

ModelParams Params(double nu_l, double nu_r, double nu_o) {
  ModelParams p;
  p.nu_l = nu_l;
  p.nu_r = nu_r;
  p.nu_o = nu_o;
  return p;
}

TEST(ValidateTest, DefaultsAreValid) {
  EXPECT_NO_THROW(Validate(ModelParams{}));
}

TEST(ValidateTest, NamesViolatedInvariant) {
  ModelParams p;
  p.k_l = 0.2;
  try {
    Validate(p);
    FAIL() << "expected ModelError";
  } catch (const ModelError& e) {
    EXPECT_NE(std::string(e.what()).find("k_l < 0"), std::string::npos);
  }
  p = ModelParams{};
  p.b_R = 0.0;
  EXPECT_THROW(Validate(p), ModelError);
  p = ModelParams{};
  p.k_o = -0.1;
  EXPECT_THROW(Validate(p), ModelError);
  p = ModelParams{};
  p.nu_r = -1.0;
  EXPECT_THROW(Validate(p), ModelError);
  p = ModelParams{};
  p.alpha_L = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(Validate(p), ModelError);
}

TEST(ValidateTest, OutsiderBlissMayBeZero) {
  ModelParams p;
  p.k_o = 0.0;
  EXPECT_NO_THROW(Validate(p));
}

TEST(TicketTest, RejectsBadPairingAndSides) {
  EXPECT_THROW(ValidateTicket({Party::kL, Politician::kR, {-0.1, 0.0}}),
               ModelError);
  EXPECT_THROW(ValidateTicket({Party::kR, Politician::kL, {0.1, 0.0}}),
               ModelError);
  EXPECT_THROW(ValidateTicket(LeftTicket(0.1)), ModelError);
  EXPECT_THROW(ValidateTicket(InsiderTicket(-0.1)), ModelError);
  EXPECT_THROW(ValidateTicket(OutsiderTicket({-0.1, 0.0})), ModelError);
  EXPECT_THROW(ValidateTicket(OutsiderTicket({0.1, -0.1})), ModelError);
  EXPECT_THROW(ValidateTicket({Party::kR, Politician::kR, {0.1, 0.2}}),
               ModelError);
  EXPECT_NO_THROW(ValidateTicket(OutsiderTicket({0.1, 0.2})));
}

TEST(MedianUtilityTest, Examples) {
  const ModelParams p = Params(1.0, 0.0, 0.0);
  EXPECT_DOUBLE_EQ(MedianUtility(LeftTicket(-0.3), p), 0.7);
  EXPECT_DOUBLE_EQ(MedianUtility(OutsiderTicket({0.0, 0.0}), p), 0.0);
  const ModelParams q = Params(1.0, 0.0, 0.8);
  EXPECT_DOUBLE_EQ(MedianUtility(OutsiderTicket({0.3, 5.0}), q), 0.5);
  EXPECT_DOUBLE_EQ(MedianUtility(OutsiderTicket({0.3, 0.0}), q), 0.5);
}

TEST(MedianUtilityTest, AffectDoesNotScaleOutsider) {
  ModelParams p = Params(0.0, 1.0, 1.0);
  p.alpha_R = 3.0;
  EXPECT_DOUBLE_EQ(MedianUtility(InsiderTicket(0.0), p), 3.0);
  EXPECT_DOUBLE_EQ(MedianUtility(OutsiderTicket({0.0, 0.0}), p), 1.0);
}

TEST(PartyUtilityTest, Examples) {
  ModelParams p;
  p.b_R = 1.0;
  EXPECT_DOUBLE_EQ(PartyUtility(Party::kR, {0.3, 0.4}, true, 0.3, p), -1.1);
  EXPECT_DOUBLE_EQ(PartyUtility(Party::kR, {0.7, 0.9}, false, 1.0, p), 0.0);
  p.b_L = -0.3;
  EXPECT_DOUBLE_EQ(PartyUtility(Party::kL, {-0.3, 0.0}, true, -0.3, p), 0.0);
}

TEST(PoliticianUtilityTest, Examples) {
  ModelParams p;
  p.k_o = 0.3;
  p.k_r = 0.5;
  EXPECT_DOUBLE_EQ(
      PoliticianUtility(Politician::kO, {0.3, 0.4}, true, true, 0.3, p), 0.4);
  EXPECT_DOUBLE_EQ(
      PoliticianUtility(Politician::kR, {0.9, 0.0}, false, false, 0.5, p),
      0.0);
  EXPECT_DOUBLE_EQ(
      PoliticianUtility(Politician::kR, {0.2, 0.0}, true, false, -0.1, p),
      -0.6);
}

TEST(RelativeQuantitiesTest, Examples) {
  const ModelParams p = Params(1.0, 0.5, 0.0);
  EXPECT_DOUBLE_EQ(p.V_r(), -0.5);
  const RelativeQuantities q =
      ComputeRelativeQuantities(-0.2, 0.3, Politician::kR, p);
  EXPECT_NEAR(q.X, 0.1, 1e-15);
  EXPECT_DOUBLE_EQ(q.V, -0.5);
  EXPECT_DOUBLE_EQ(
      ComputeRelativeQuantities(0.0, 0.0, Politician::kO, p).X, 0.0);
  EXPECT_DOUBLE_EQ(ComputeRelativeQuantities(0.0, 0.0, Politician::kO, p).V,
                   -1.0);
  EXPECT_THROW(ComputeRelativeQuantities(0.0, 0.0, Politician::kL, p),
               ModelError);
}

TEST(ResolveElectionTest, Examples) {
  const ModelParams p = Params(0.0, 0.5, 0.0);  // V_r = 0.5
  EXPECT_EQ(ResolveElection(LeftTicket(-0.2), InsiderTicket(0.3), p).kind(),
            ElectionResult::Kind::kRightWins);
  EXPECT_EQ(ResolveElection(LeftTicket(0.0), InsiderTicket(0.6), p).kind(),
            ElectionResult::Kind::kLeftWins);
  const ModelParams zero = Params(0.0, 0.0, 0.0);
  const ElectionResult tie =
      ResolveElection(LeftTicket(0.0), InsiderTicket(0.0), zero);
  EXPECT_TRUE(tie.is_lottery());
  EXPECT_THROW(tie.winner(), std::logic_error);
  EXPECT_DOUBLE_EQ(tie.WinProbability(Politician::kR), 0.5);
}

TEST(ResolveElectionTest, TieBandUsesTolerance) {
  const ModelParams p = Params(0.0, 0.5, 0.0);
  EXPECT_TRUE(
      ResolveElection(LeftTicket(0.0), InsiderTicket(0.5 + 1e-10), p)
          .is_lottery());
  EXPECT_FALSE(
      ResolveElection(LeftTicket(0.0), InsiderTicket(0.5 + 1e-6), p)
          .is_lottery());
  EXPECT_FALSE(
      ResolveElection(LeftTicket(0.0), InsiderTicket(0.5 + 1e-10), p, 0.0)
          .is_lottery());
}

TEST(ResolveElectionTest, AgreesWithMedianUtilityComparison) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  for (int i = 0; i < 5000; ++i) {
    const ModelParams p = Params(u(rng), u(rng), u(rng));
    const MatchTicket left = LeftTicket(-u(rng));
    const MatchTicket right = i % 2 ? InsiderTicket(u(rng))
                                    : OutsiderTicket({u(rng), u(rng)});
    const double diff = MedianUtility(left, p) - MedianUtility(right, p);
    const ElectionResult r = ResolveElection(left, right, p);
    if (diff > 1e-9) {
      EXPECT_EQ(r.kind(), ElectionResult::Kind::kLeftWins);
    } else if (diff < -1e-9) {
      EXPECT_EQ(r.kind(), ElectionResult::Kind::kRightWins);
    }
  }
}

TEST(ElectionResultTest, LotteryExpectations) {
  ModelParams p;
  p.b_R = 1.0;
  p.k_o = 0.0;
  const ElectionResult r(ElectionResult::Kind::kLottery, LeftTicket(0.0),
                         OutsiderTicket({0.0, 0.8}));
  EXPECT_DOUBLE_EQ(r.ExpectedPolicy(), 0.0);
  EXPECT_DOUBLE_EQ(r.ExpectedRent(), 0.4);
  // Party R: half of -1 - 0.8 and half of -1.
  EXPECT_DOUBLE_EQ(ExpectedPartyUtility(Party::kR, r, p), -1.4);
  EXPECT_DOUBLE_EQ(ExpectedPoliticianUtility(Politician::kO, r, p), 0.4);
  EXPECT_EQ(ToString(r), "Lottery[(L,l,(0,0)),(R,o,(0,0.8))]");
}

TEST(WinningPolicyRangeTest, Examples) {
  const WinningRange pos = WinningPolicyRange(0.5);
  EXPECT_EQ(pos.advantaged, Party::kR);
  EXPECT_DOUBLE_EQ(pos.winning.lo, 0.0);
  EXPECT_DOUBLE_EQ(pos.winning.hi, 0.5);
  const WinningRange zero = WinningPolicyRange(0.0);
  EXPECT_TRUE(zero.winning.IsPoint());
  EXPECT_DOUBLE_EQ(zero.winning.lo, 0.0);
  const WinningRange neg = WinningPolicyRange(-0.4);
  EXPECT_EQ(neg.advantaged, Party::kL);
  EXPECT_DOUBLE_EQ(neg.winning.lo, -0.4);
  EXPECT_DOUBLE_EQ(neg.winning.hi, 0.0);
}

// Inside the range the advantaged side beats the most centrist opponent;
// just outside it loses.
TEST(WinningPolicyRangeTest, MatchesElectionRule) {
  for (double v : {-0.9, -0.4, 0.3, 1.2}) {
    ModelParams p = Params(1.0, 1.0 + v, 0.0);
    const WinningRange range = WinningPolicyRange(v);
    const double inside = (range.winning.lo + range.winning.hi) / 2.0;
    const double outside =
        v > 0 ? range.winning.hi + 1e-6 : range.winning.lo - 1e-6;
    const bool r_side = range.advantaged == Party::kR;
    auto kind = [&](double x) {
      return r_side
                 ? ResolveElection(LeftTicket(0.0), InsiderTicket(x), p).kind()
                 : ResolveElection(LeftTicket(x), InsiderTicket(0.0), p).kind();
    };
    const auto win = r_side ? ElectionResult::Kind::kRightWins
                            : ElectionResult::Kind::kLeftWins;
    EXPECT_EQ(kind(inside), win) << v;
    EXPECT_NE(kind(outside), win) << v;
  }
}

}  // namespace
}  // namespace nomgame
