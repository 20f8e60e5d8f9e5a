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


#include "commands.h"

#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "nomgame/fixtures.h"
#include "nomgame/parallel.h"
#include "report.h"

namespace nomgame::cli {

namespace {

struct Instance {
  std::string name;
  ModelParams params;
  std::vector<GameKind> games;
};

std::vector<Instance> VerifyInstances(const RunConfig& config,
                                      const VerifyOptions& options) {
  const std::vector<GameKind> both = {GameKind::kInsiderOnly,
                                      GameKind::kWithOutsider};
  std::vector<Instance> instances;
  if (config.samples > 0) {
    std::mt19937_64 rng(config.seed);
    for (int i = 0; i < config.samples; ++i) {
      instances.push_back(
          {fmt::format("random-{}", i), RandomParams(rng), both});
    }
  } else if (options.single_instance) {
    instances.push_back({"config", config.params, both});
  } else {
    for (const Fixture& f : TableFixtures()) {
      instances.push_back({f.name, f.params, {f.expected.game}});
    }
  }
  return instances;
}

// Moves the winning ticket (the right one in a lottery) by `delta`.
EquilibriumOutcome Corrupt(const EquilibriumOutcome& outcome, double delta) {
  EquilibriumOutcome bad = outcome;
  MatchTicket left = outcome.result.left();
  MatchTicket right = outcome.result.right();
  if (outcome.result.kind() == ElectionResult::Kind::kLeftWins) {
    left.platform.policy += delta;
    bad.offer_l.policy += delta;
  } else if (right.candidate == Politician::kO) {
    right.platform.policy += delta;
    if (bad.offer_o) bad.offer_o->policy += delta;
  } else {
    right.platform.policy += delta;
    bad.offer_r.policy += delta;
  }
  bad.result = ElectionResult(outcome.result.kind(), left, right);
  bad.winning_policy = bad.result.ExpectedPolicy();
  return bad;
}

Format FormatOr(const RunConfig& config, Format fallback) {
  return config.format.value_or(fallback);
}

}  // namespace

int RunSolve(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const ModelParams& p = config.params;
  EquilibriumOutcome insider = SolveInsider(p, config.tie_eps);
  EquilibriumOutcome outsider = SolveOutsider(p, config.tie_eps);
  const WelfareComparison comparison = CompareGames(p, config.tie_eps);
  const WelfareConditions tags = WelfareReductionCondition(p, config.tie_eps);
  if (FormatOr(config, Format::kJson) == Format::kJson) {
    Json j;
    j["params"] = ToJson(p);
    j["insider"] = ToJson(insider);
    j["outsider"] = ToJson(outsider);
    j["comparison"] = ToJson(comparison);
    j["welfare_tag"] = tags.ToString();
    out << j.dump(2) << '\n';
  } else {
    out << "game,case_label,winner,winning_policy,winning_rent,"
           "offer_l_policy,offer_r_policy,offer_o_policy,offer_o_rent,"
           "u_median,u_partyR\n";
    auto row = [&](const EquilibriumOutcome& o, double u_median,
                   double u_party) {
      const Platform offer_o = o.offer_o.value_or(Platform::Null());
      out << fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n",
                         ToString(o.case_label.game), o.case_label.ToString(),
                         WinnerLabel(o.result), CsvReal(o.winning_policy),
                         CsvReal(o.winning_rent), CsvReal(o.offer_l.policy),
                         CsvReal(o.offer_r.policy),
                         o.offer_o ? CsvReal(offer_o.policy) : "",
                         o.offer_o ? CsvReal(offer_o.rent) : "",
                         CsvReal(u_median), CsvReal(u_party));
    };
    row(insider, comparison.u_median_insider, comparison.u_partyR_insider);
    row(outsider, comparison.u_median_outsider, comparison.u_partyR_outsider);
  }
  err << fmt::format("insider game: {} {}\noutsider game: {} {}\n",
                     insider.case_label.ToString(), ToString(insider.result),
                     outsider.case_label.ToString(), ToString(outsider.result));
  return kExitOk;
}

int RunVerify(const RunConfig& config, const VerifyOptions& options,
              std::ostream& out, std::ostream& err) {
  const std::vector<Instance> instances = VerifyInstances(config, options);
  std::vector<std::vector<GameVerification>> results(instances.size());
  for (const Instance& inst : instances) {
    ValidateGrid(MakeGrid(config, inst.params));
  }
  ParallelFor(instances.size(), [&](std::size_t i) {
    const Instance& inst = instances[i];
    const GridSpec grid = MakeGrid(config, inst.params);
    for (GameKind game : inst.games) {
      EquilibriumOutcome claimed = Solve(game, inst.params, config.tie_eps);
      if (options.corrupt_policy) {
        claimed = Corrupt(claimed, *options.corrupt_policy);
      }
      results[i].push_back(VerifyOutcome(game, inst.params, grid, claimed));
    }
  });

  int failures = 0;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    for (const GameVerification& v : results[i]) {
      if (v.agrees()) continue;
      ++failures;
      for (const std::string& d : v.discrepancies) {
        err << fmt::format("DISCREPANCY {} {}\n", instances[i].name, d);
      }
    }
  }

  if (FormatOr(config, Format::kJson) == Format::kJson) {
    Json list = Json::array();
    for (std::size_t i = 0; i < instances.size(); ++i) {
      Json games = Json::array();
      for (const GameVerification& v : results[i]) games.push_back(ToJson(v));
      list.push_back({{"name", instances[i].name},
                      {"params", ToJson(instances[i].params)},
                      {"games", std::move(games)}});
    }
    Json j;
    j["agrees"] = failures == 0;
    j["discrepancies"] = failures;
    j["instances"] = std::move(list);
    out << j.dump(2) << '\n';
  } else {
    out << "name,game,case_label,agrees,winner_agrees,policy_error,"
           "rent_error,tolerance,equilibria\n";
    for (std::size_t i = 0; i < instances.size(); ++i) {
      for (const GameVerification& v : results[i]) {
        out << fmt::format("{},{},{},{},{},{},{},{},{}\n", instances[i].name,
                           ToString(v.game), v.claimed.case_label.ToString(),
                           v.agrees(), v.winner_agrees,
                           CsvReal(v.policy_error), CsvReal(v.rent_error),
                           CsvReal(v.tolerance), v.equilibria.size());
      }
    }
  }
  std::size_t checked = 0;
  for (const auto& r : results) checked += r.size();
  err << fmt::format("verified {} game instances: {} discrepant\n", checked,
                     failures);
  return failures == 0 ? kExitOk : kExitDiscrepancy;
}

int RunSweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Axis axis1 = ParseAxis(config.axis1);
  const Axis axis2 = ParseAxis(config.axis2);
  const RegionMap map = Sweep(config.params, axis1, axis2, config.tie_eps);
  if (FormatOr(config, Format::kCsv) == Format::kCsv) {
    out << SweepCsv(map);
  } else {
    out << SweepJson(map).dump(2) << '\n';
  }
  std::size_t infeasible = 0;
  for (const RegionCell& cell : map.cells) {
    if (!cell.feasible) ++infeasible;
  }
  if (infeasible == map.cells.size()) {
    err << fmt::format("all {} cells infeasible: {}\n", map.cells.size(),
                       map.cells.front().infeasible_reason);
    return kExitConfigError;
  }
  return kExitOk;
}

int RunRegions(const RunConfig& config, std::ostream& out, std::ostream&) {
  const auto cells =
      MedianVoterIndifferenceRegion(config.policy_steps, -1.0, 1.0,
                                    config.tie_eps);
  if (FormatOr(config, Format::kCsv) == Format::kCsv) {
    out << RegionsCsv(cells);
  } else {
    out << RegionsJson(cells).dump(2) << '\n';
  }
  return kExitOk;
}

int RunDumpConfig(const RunConfig& config, std::ostream& out) {
  out << DumpConfig(config);
  return kExitOk;
}

}  // namespace nomgame::cli
