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
#include <limits>
#include <set>
#include <tuple>
#include <utility>

#include <fmt/format.h>

namespace nomgame {

double GridSpec::PolicyStep() const {
  return (policy_hi - policy_lo) / std::max(policy_steps - 1, 1);
}

double GridSpec::RentStep() const {
  return rent_hi / std::max(rent_steps - 1, 1);
}

double GridSpec::Tolerance() const {
  return std::max(PolicyStep(), RentStep()) + epsilon;
}

void ValidateGrid(const GridSpec& g) {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw GridError(fmt::format("grid infeasible: {}", what));
  };
  require(std::isfinite(g.policy_lo) && std::isfinite(g.policy_hi),
          "policy bounds finite");
  require(g.policy_lo <= 0.0 && 0.0 <= g.policy_hi,
          "policy_lo <= 0 <= policy_hi");
  require(g.policy_steps >= 2, "policy_steps >= 2");
  require(g.rent_steps >= 2, "rent_steps >= 2");
  require(std::isfinite(g.rent_hi) && g.rent_hi >= 0.0, "rent_hi >= 0");
  require(std::isfinite(g.epsilon) && g.epsilon > 0.0, "epsilon > 0");
  require(g.tie_eps >= 0.0 && g.tie_eps < g.epsilon, "0 <= tie_eps < epsilon");
  require(g.max_rounds >= 1, "max_rounds >= 1");
}

GridSpec DefaultGrid(const ModelParams& p, double epsilon, int policy_steps,
                     int rent_steps) {
  const double vr = p.V_r();
  const double vo = p.V_o();
  GridSpec g;
  g.policy_lo = std::min({p.k_l, vr, vo}) - 1.0;
  g.policy_hi = std::max({p.k_r, p.k_o, p.b_R, vr, vo}) + 1.0;
  g.policy_steps = policy_steps;
  g.rent_hi =
      2.0 * (std::abs(p.k_l) + std::abs(p.b_R) + std::abs(vr) + std::abs(vo)) +
      1.0;
  g.rent_steps = rent_steps;
  g.epsilon = epsilon;
  const double left_vs_r = std::max(p.k_l, vr);
  const double left_vs_o = std::max(p.k_l, vo);
  g.critical_points = {0.0,
                       p.k_l,
                       p.k_r,
                       p.k_o,
                       p.b_R,
                       vr,
                       vo,
                       2.0 * p.b_R - left_vs_r,
                       2.0 * p.b_R - left_vs_o};
  g.critical_rents = {
      2.0 * std::abs(left_vs_r),
      std::abs(left_vs_r - p.b_R) - std::abs(std::min(p.k_o, vo) - p.b_R),
      std::abs(std::min(p.b_R, vr) - p.b_R) -
          std::abs(std::min(p.b_R, vo) - p.b_R)};
  return g;
}

namespace {

std::vector<double> SortedUnique(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

StrategyGrids BuildStrategyGrids(const GridSpec& g) {
  ValidateGrid(g);
  std::vector<double> policies;
  const double step = g.PolicyStep();
  for (int i = 0; i < g.policy_steps; ++i) {
    policies.push_back(g.policy_lo + step * i);
  }
  policies.push_back(0.0);
  for (double c : g.critical_points) {
    for (double shift : {-g.epsilon, 0.0, g.epsilon}) {
      policies.push_back(c + shift);
    }
  }
  StrategyGrids out;
  for (double x : policies) {
    if (x <= 0.0) out.left_policies.push_back(x);
    if (x >= 0.0) out.right_policies.push_back(x);
  }
  out.left_policies = SortedUnique(std::move(out.left_policies));
  out.right_policies = SortedUnique(std::move(out.right_policies));

  const double rstep = g.RentStep();
  for (int i = 0; i < g.rent_steps; ++i) out.rents.push_back(rstep * i);
  for (double c : g.critical_rents) {
    for (int k = -4; k <= 1; ++k) {
      const double m = c + k * g.epsilon;
      if (m >= 0.0) out.rents.push_back(m);
    }
  }
  out.rents = SortedUnique(std::move(out.rents));
  return out;
}

ElectionResult BestVote(const MatchTicket& left, const MatchTicket& right,
                        const ModelParams& params, double tie_eps) {
  return ResolveElection(left, right, params, tie_eps);
}

Endorsement BestEndorsement(const Platform& offer_r,
                            const std::optional<Platform>& offer_o,
                            const Platform& left_vs_r,
                            const Platform& left_vs_o,
                            const ModelParams& params, double tie_eps) {
  ElectionResult with_r = BestVote(LeftTicket(left_vs_r.policy),
                                   InsiderTicket(offer_r.policy), params,
                                   tie_eps);
  const double u_r = ExpectedPartyUtility(Party::kR, with_r, params);
  if (!offer_o) return {Politician::kR, with_r, u_r, std::nullopt};
  ElectionResult with_o = BestVote(LeftTicket(left_vs_o.policy),
                                   OutsiderTicket(*offer_o), params, tie_eps);
  const double u_o = ExpectedPartyUtility(Party::kR, with_o, params);
  if (u_o > u_r + tie_eps) return {Politician::kO, with_o, u_r, u_o};
  return {Politician::kR, with_r, u_r, u_o};
}

std::string ToString(const OracleEquilibrium& eq) {
  std::string o = "absent";
  if (eq.offer_o) {
    o = fmt::format("({:.12g},{:.12g})", eq.offer_o->policy,
                    eq.offer_o->rent);
  }
  return fmt::format(
      "l=({:.12g},0) l_off_path=({:.12g},0) r=({:.12g},0) o={} nominee={} "
      "result={} certified={}",
      eq.offer_l.policy, eq.offer_l_off_path.policy, eq.offer_r.policy, o,
      ToString(eq.nominee), ToString(eq.result), eq.certified);
}

StartProfile StartFromOutcome(const EquilibriumOutcome& outcome) {
  return {outcome.offer_l, outcome.offer_r, outcome.offer_o};
}

namespace {

enum Player { kPlayerL = 0, kPlayerR = 1, kPlayerO = 2 };

struct Profile {
  int l = -1;  // -1: l responds in each subgame
  int r = 0;
  int o = -1;  // -1: no outsider in the game

  auto Key() const { return std::make_tuple(l, r, o); }
  bool operator<(const Profile& other) const { return Key() < other.Key(); }
  bool operator==(const Profile& other) const { return Key() == other.Key(); }
};

struct Evaluation {
  Endorsement endorsement;
  Platform left_vs_r;
  Platform left_vs_o;
};

// Stage-1 game on index-encoded grids.
class Engine {
 public:
  Engine(GameKind game, const ModelParams& p, const GridSpec& g)
      : game_(game), p_(p), g_(g), grids_(BuildStrategyGrids(g)) {
    Validate(p);
    zero_l_ = IndexOf(grids_.left_policies, 0.0);
    zero_r_ = IndexOf(grids_.right_policies, 0.0);
    nrents_ = static_cast<int>(grids_.rents.size());
    response_.assign(2, std::vector<int>(grids_.right_policies.size(), -1));
  }

  bool has_outsider() const { return game_ == GameKind::kWithOutsider; }
  bool sequential() const { return g_.timing == LeftTiming::kSequential; }

  std::vector<Player> Players() const {
    std::vector<Player> players;
    if (!sequential()) players.push_back(kPlayerL);
    players.push_back(kPlayerR);
    if (has_outsider() && !g_.outsider_null_only) players.push_back(kPlayerO);
    return players;
  }

  int NumStrategies(Player who) const {
    switch (who) {
      case kPlayerL:
        return static_cast<int>(grids_.left_policies.size());
      case kPlayerR:
        return static_cast<int>(grids_.right_policies.size());
      case kPlayerO:
        return g_.outsider_null_only
                   ? 1
                   : static_cast<int>(grids_.right_policies.size()) * nrents_;
    }
    return 0;
  }

  int NullStrategy(Player who) const {
    switch (who) {
      case kPlayerL:
        return zero_l_;
      case kPlayerR:
        return zero_r_;
      case kPlayerO:
        return g_.outsider_null_only ? 0 : zero_r_ * nrents_;
    }
    return 0;
  }

  Platform OutsiderPlatform(int o) const {
    if (g_.outsider_null_only) return Platform::Null();
    return {grids_.right_policies[o / nrents_], grids_.rents[o % nrents_]};
  }

  Platform StrategyPlatform(Player who, int s) const {
    switch (who) {
      case kPlayerL:
        return {grids_.left_policies[s], 0.0};
      case kPlayerR:
        return {grids_.right_policies[s], 0.0};
      case kPlayerO:
        return OutsiderPlatform(s);
    }
    return {};
  }

  int Get(const Profile& prof, Player who) const {
    return who == kPlayerL ? prof.l : who == kPlayerR ? prof.r : prof.o;
  }
  static void Set(Profile& prof, Player who, int s) {
    (who == kPlayerL ? prof.l : who == kPlayerR ? prof.r : prof.o) = s;
  }

  Profile NullProfile() const {
    Profile prof;
    prof.l = sequential() ? -1 : zero_l_;
    prof.r = zero_r_;
    prof.o = has_outsider() ? NullStrategy(kPlayerO) : -1;
    return prof;
  }

  Profile Snap(const StartProfile& start) const {
    Profile prof = NullProfile();
    if (!sequential()) {
      prof.l = Nearest(grids_.left_policies, start.offer_l.policy);
    }
    prof.r = Nearest(grids_.right_policies, start.offer_r.policy);
    if (has_outsider() && !g_.outsider_null_only) {
      const Platform o = start.offer_o.value_or(Platform::Null());
      prof.o = Nearest(grids_.right_policies, o.policy) * nrents_ +
               Nearest(grids_.rents, o.rent);
    }
    return prof;
  }

  // l's best offer against R's ticket; the null offer is kept among ties.
  int LeftResponse(Politician candidate, int right_policy) {
    int& cached = response_[candidate == Politician::kO ? 1 : 0][right_policy];
    if (cached >= 0) return cached;
    const MatchTicket right{Party::kR, candidate,
                            {grids_.right_policies[right_policy], 0.0}};
    double best = -std::numeric_limits<double>::infinity();
    std::vector<double> utility(grids_.left_policies.size());
    for (std::size_t i = 0; i < utility.size(); ++i) {
      const ElectionResult result =
          BestVote(LeftTicket(grids_.left_policies[i]), right, p_, g_.tie_eps);
      utility[i] = ExpectedPoliticianUtility(Politician::kL, result, p_);
      best = std::max(best, utility[i]);
    }
    int choice = -1;
    if (utility[zero_l_] >= best - g_.tie_eps) {
      choice = zero_l_;
    } else {
      for (std::size_t i = 0; i < utility.size(); ++i) {
        if (utility[i] >= best - g_.tie_eps) {
          choice = static_cast<int>(i);
          break;
        }
      }
    }
    cached = choice;
    return choice;
  }

  Evaluation Evaluate(const Profile& prof) {
    const Platform offer_r{grids_.right_policies[prof.r], 0.0};
    std::optional<Platform> offer_o;
    if (prof.o >= 0) offer_o = OutsiderPlatform(prof.o);
    Platform left_vs_r;
    Platform left_vs_o;
    if (sequential()) {
      left_vs_r = {grids_.left_policies[LeftResponse(Politician::kR, prof.r)],
                   0.0};
      if (offer_o) {
        const int o_policy = g_.outsider_null_only ? zero_r_ : prof.o / nrents_;
        left_vs_o = {
            grids_.left_policies[LeftResponse(Politician::kO, o_policy)], 0.0};
      }
    } else {
      left_vs_r = left_vs_o = {grids_.left_policies[prof.l], 0.0};
    }
    return {BestEndorsement(offer_r, offer_o, left_vs_r, left_vs_o, p_,
                            g_.tie_eps),
            left_vs_r, left_vs_o};
  }

  double Payoff(Player who, const Profile& prof) {
    const Politician politician = who == kPlayerL   ? Politician::kL
                                  : who == kPlayerR ? Politician::kR
                                                    : Politician::kO;
    return ExpectedPoliticianUtility(politician,
                                     Evaluate(prof).endorsement.result, p_);
  }

  // Highest payoff over all unilateral deviations of `who`.
  double BestPayoff(Player who, Profile prof, std::vector<double>* all) {
    const int n = NumStrategies(who);
    if (all) all->resize(n);
    double best = -std::numeric_limits<double>::infinity();
    for (int s = 0; s < n; ++s) {
      Set(prof, who, s);
      const double u = Payoff(who, prof);
      if (all) (*all)[s] = u;
      best = std::max(best, u);
    }
    return best;
  }

  bool IsBestResponse(Player who, const Profile& prof) {
    const double current = Payoff(who, prof);
    return BestPayoff(who, prof, nullptr) <= current + g_.tie_eps;
  }

  bool Certified(const Profile& prof) {
    for (Player who : Players()) {
      if (!IsBestResponse(who, prof)) return false;
    }
    return true;
  }

  // Moves `who` to a best response. Keeps the current strategy when it is
  // already optimal; otherwise prefers the null offer, then the optimal
  // strategy closest to the current one.
  bool Improve(Player who, Profile& prof) {
    std::vector<double> utility;
    const double best = BestPayoff(who, prof, &utility);
    const double threshold = best - g_.tie_eps;
    const int current = Get(prof, who);
    if (utility[current] >= threshold) return false;
    const int null = NullStrategy(who);
    int choice = -1;
    if (utility[null] >= threshold) {
      choice = null;
    } else {
      const Platform here = StrategyPlatform(who, current);
      double best_distance = std::numeric_limits<double>::infinity();
      for (int s = 0; s < static_cast<int>(utility.size()); ++s) {
        if (utility[s] < threshold) continue;
        const Platform there = StrategyPlatform(who, s);
        const double distance = std::abs(there.policy - here.policy) +
                                std::abs(there.rent - here.rent);
        if (distance < best_distance) {
          best_distance = distance;
          choice = s;
        }
      }
    }
    Set(prof, who, choice);
    return true;
  }

  std::optional<Profile> Iterate(Profile prof) {
    for (int round = 0; round < g_.max_rounds; ++round) {
      bool changed = false;
      for (Player who : Players()) changed |= Improve(who, prof);
      if (!changed) return prof;
    }
    return std::nullopt;
  }

  std::size_t ProfileCount() const {
    std::size_t count = 1;
    for (Player who : Players()) count *= NumStrategies(who);
    return count;
  }

  void Enumerate(const std::vector<Player>& players, std::size_t depth,
                 Profile& prof, std::vector<Profile>& found) {
    if (depth == players.size()) {
      if (Certified(prof)) found.push_back(prof);
      return;
    }
    for (int s = 0; s < NumStrategies(players[depth]); ++s) {
      Set(prof, players[depth], s);
      Enumerate(players, depth + 1, prof, found);
    }
  }

  // Drops a profile when some politician could switch to the null offer,
  // at equal payoff, and the profile would remain certified.
  std::vector<Profile> CanonicalNull(const std::vector<Profile>& found) {
    const std::set<Profile> all(found.begin(), found.end());
    std::vector<Profile> kept;
    for (const Profile& prof : found) {
      bool dominated = false;
      for (Player who : Players()) {
        if (Get(prof, who) == NullStrategy(who)) continue;
        Profile alt = prof;
        Set(alt, who, NullStrategy(who));
        if (all.count(alt) &&
            std::abs(Payoff(who, alt) - Payoff(who, prof)) <= g_.tie_eps) {
          dominated = true;
          break;
        }
      }
      if (!dominated) kept.push_back(prof);
    }
    return kept;
  }

  OracleEquilibrium ToEquilibrium(const Profile& prof) {
    const Evaluation ev = Evaluate(prof);
    OracleEquilibrium eq{{}, {}, {}, std::nullopt, ev.endorsement.nominee,
                         ev.endorsement.result, false};
    const bool with_o = ev.endorsement.nominee == Politician::kO;
    eq.offer_l = with_o ? ev.left_vs_o : ev.left_vs_r;
    eq.offer_l_off_path = with_o ? ev.left_vs_r : ev.left_vs_o;
    if (!has_outsider()) eq.offer_l_off_path = eq.offer_l;
    eq.offer_r = {grids_.right_policies[prof.r], 0.0};
    if (prof.o >= 0) eq.offer_o = OutsiderPlatform(prof.o);
    eq.certified = Certified(prof);
    return eq;
  }

  static int IndexOf(const std::vector<double>& v, double x) {
    return static_cast<int>(std::lower_bound(v.begin(), v.end(), x) -
                            v.begin());
  }

  static int Nearest(const std::vector<double>& v, double x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end()) return static_cast<int>(v.size()) - 1;
    if (it != v.begin() && std::abs(*(it - 1) - x) <= std::abs(*it - x)) {
      --it;
    }
    return static_cast<int>(it - v.begin());
  }

  const StrategyGrids& grids() const { return grids_; }
  const ModelParams& params() const { return p_; }

 private:
  GameKind game_;
  const ModelParams& p_;
  const GridSpec& g_;
  StrategyGrids grids_;
  int zero_l_ = 0;
  int zero_r_ = 0;
  int nrents_ = 1;
  std::vector<std::vector<int>> response_;
};

// Offer of an R-side politician that R likes best among those that still
// win: the policy closest to b_R inside her winning range.
Platform ThreatOffer(Politician who, const ModelParams& p, double epsilon) {
  const double reach = std::max(ValenceAdvantage(who, p) - epsilon, 0.0);
  return {std::clamp(p.b_R, 0.0, reach), 0.0};
}

std::vector<StartProfile> DefaultStarts(const ModelParams& p,
                                        double epsilon) {
  return {
      {Platform::Null(), Platform::Null(), Platform::Null()},
      {{p.k_l, 0.0}, {p.k_r, 0.0}, Platform{p.k_o, 0.0}},
      {{0.0, 0.0}, {p.b_R, 0.0}, Platform{p.b_R, 0.0}},
      {{0.0, 0.0},
       ThreatOffer(Politician::kR, p, epsilon),
       ThreatOffer(Politician::kO, p, epsilon)},
  };
}

}  // namespace

std::vector<OracleEquilibrium> FindStage1Equilibria(
    GameKind game, const ModelParams& params, const GridSpec& grid,
    std::span<const StartProfile> extra_starts) {
  Engine engine(game, params, grid);
  std::vector<Profile> found;
  if (engine.ProfileCount() <= grid.exhaustive_limit) {
    Profile prof = engine.NullProfile();
    engine.Enumerate(engine.Players(), 0, prof, found);
    found = engine.CanonicalNull(found);
  } else {
    std::vector<StartProfile> starts = DefaultStarts(params, grid.epsilon);
    starts.insert(starts.end(), extra_starts.begin(), extra_starts.end());
    std::set<Profile> seen;
    for (const StartProfile& start : starts) {
      if (auto fixed = engine.Iterate(engine.Snap(start))) {
        if (seen.insert(*fixed).second) found.push_back(*fixed);
      }
    }
  }
  std::vector<OracleEquilibrium> out;
  out.reserve(found.size());
  for (const Profile& prof : found) out.push_back(engine.ToEquilibrium(prof));
  return out;
}

bool RecheckEquilibrium(GameKind game, const ModelParams& params,
                        const GridSpec& grid, const OracleEquilibrium& eq) {
  Engine engine(game, params, grid);
  const Profile prof =
      engine.Snap({eq.offer_l, eq.offer_r, eq.offer_o});
  return engine.Certified(prof);
}

namespace {

// Same winning match: decisive winner (party and candidate) or the same
// pair of tickets in a lottery.
bool SameWinner(const ElectionResult& a, const ElectionResult& b) {
  if (a.kind() != b.kind()) return false;
  if (a.kind() == ElectionResult::Kind::kLeftWins) return true;
  return a.right().candidate == b.right().candidate;
}

std::string Describe(const ElectionResult& r) {
  return fmt::format("{} policy={:.12g} rent={:.12g}", ToString(r),
                     r.ExpectedPolicy(), r.ExpectedRent());
}

}  // namespace

GameVerification VerifyOutcome(GameKind game, const ModelParams& params,
                               const GridSpec& grid,
                               const EquilibriumOutcome& claimed) {
  GameVerification v{game, claimed, {}, std::nullopt, grid.Tolerance(),
                     false, 0.0, 0.0, {}};
  // Seeds: the claimed profile, and the same profile with the losing R-side
  // politician making her threat offer instead of the null platform.
  std::vector<StartProfile> hints{StartFromOutcome(claimed)};
  const bool r_elected = claimed.result.WinProbability(Politician::kR) > 0.0;
  const bool o_elected = claimed.result.WinProbability(Politician::kO) > 0.0;
  if (!r_elected) {
    StartProfile h = hints.front();
    h.offer_r = ThreatOffer(Politician::kR, params, grid.epsilon);
    hints.push_back(h);
  }
  if (game == GameKind::kWithOutsider && o_elected && !r_elected &&
      claimed.offer_o.has_value()) {
    // The tabulated outsider offer is an epsilon limit; seed the search with
    // a concrete offer just inside the limit as well.
    StartProfile h = hints.back();
    Platform& o = *h.offer_o;
    if (params.V_o() > 0.0) {
      o.policy = std::min(o.policy, params.V_o() - grid.epsilon);
    }
    o.rent = std::max(o.rent - 2.0 * grid.epsilon, 0.0);
    hints.push_back(h);
  }
  if (game == GameKind::kWithOutsider && !o_elected) {
    StartProfile h = hints.front();
    h.offer_o = ThreatOffer(Politician::kO, params, grid.epsilon);
    hints.push_back(h);
  }
  v.equilibria = FindStage1Equilibria(game, params, grid, hints);
  if (v.equilibria.empty()) {
    v.discrepancies.push_back(fmt::format(
        "{}: no pure equilibrium on this grid; closed form {}",
        ToString(game), Describe(claimed.result)));
    return v;
  }
  double best_error = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.equilibria.size(); ++i) {
    const OracleEquilibrium& eq = v.equilibria[i];
    if (!SameWinner(eq.result, claimed.result)) continue;
    v.winner_agrees = true;
    const double dp =
        std::abs(eq.result.ExpectedPolicy() - claimed.winning_policy);
    const double dm = std::abs(eq.result.ExpectedRent() - claimed.winning_rent);
    if (std::max(dp, dm) < best_error) {
      best_error = std::max(dp, dm);
      v.policy_error = dp;
      v.rent_error = dm;
      v.matched = i;
    }
  }
  if (!v.winner_agrees) {
    std::string listing;
    for (const OracleEquilibrium& eq : v.equilibria) {
      listing += "\n    oracle: " + ToString(eq);
    }
    v.discrepancies.push_back(fmt::format(
        "{} {}: winner mismatch; closed form {}{}", ToString(game),
        claimed.case_label.ToString(), Describe(claimed.result), listing));
    v.matched.reset();
    return v;
  }
  if (best_error > v.tolerance) {
    v.discrepancies.push_back(fmt::format(
        "{} {}: policy error {:.3g}, rent error {:.3g} exceed tolerance "
        "{:.3g}; closed form {}\n    oracle: {}",
        ToString(game), claimed.case_label.ToString(), v.policy_error,
        v.rent_error, v.tolerance, Describe(claimed.result),
        ToString(v.equilibria[*v.matched])));
    v.matched.reset();
  }
  return v;
}

bool VerificationReport::agrees() const {
  return std::all_of(games.begin(), games.end(),
                     [](const GameVerification& g) { return g.agrees(); });
}

VerificationReport VerifyClosedForm(const ModelParams& params,
                                    const GridSpec& grid) {
  VerificationReport report{params, {}};
  for (GameKind game : {GameKind::kInsiderOnly, GameKind::kWithOutsider}) {
    report.games.push_back(VerifyOutcome(
        game, params, grid, Solve(game, params, grid.tie_eps)));
  }
  return report;
}

}  // namespace nomgame
