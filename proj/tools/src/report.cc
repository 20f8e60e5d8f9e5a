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


#include "report.h"

#include <fmt/format.h>

namespace nomgame::cli {

namespace {

std::string Ticket(const MatchTicket& t) {
  return fmt::format("{}-{}", ToString(t.party), ToString(t.candidate));
}

Json TicketJson(const MatchTicket& t) {
  return {{"party", ToString(t.party)},
          {"candidate", ToString(t.candidate)},
          {"policy", t.platform.policy},
          {"rent", t.platform.rent}};
}

std::string_view KindName(ElectionResult::Kind kind) {
  switch (kind) {
    case ElectionResult::Kind::kLeftWins:
      return "LeftWins";
    case ElectionResult::Kind::kRightWins:
      return "RightWins";
    case ElectionResult::Kind::kLottery:
      return "Lottery";
  }
  return "";
}

}  // namespace

std::string CsvReal(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  return fmt::format("{:.12g}", v);
}

std::string WinnerLabel(const ElectionResult& result) {
  if (result.is_lottery()) {
    return fmt::format("Lottery({}|{})", Ticket(result.left()),
                       Ticket(result.right()));
  }
  return Ticket(result.winner());
}

Json ToJson(const ModelParams& p) {
  return {{"b_L", p.b_L},         {"b_R", p.b_R},   {"alpha_L", p.alpha_L},
          {"alpha_R", p.alpha_R}, {"k_l", p.k_l},   {"k_r", p.k_r},
          {"k_o", p.k_o},         {"nu_l", p.nu_l}, {"nu_r", p.nu_r},
          {"nu_o", p.nu_o},       {"V_r", p.V_r()}, {"V_o", p.V_o()}};
}

Json ToJson(const Platform& platform) {
  return {{"policy", platform.policy}, {"rent", platform.rent}};
}

Json ToJson(const ElectionResult& result) {
  return {{"kind", KindName(result.kind())},
          {"winner", WinnerLabel(result)},
          {"left", TicketJson(result.left())},
          {"right", TicketJson(result.right())},
          {"expected_policy", result.ExpectedPolicy()},
          {"expected_rent", result.ExpectedRent()}};
}

Json ToJson(const EquilibriumOutcome& o) {
  Json j;
  j["case_label"] = o.case_label.ToString();
  j["offer_l"] = ToJson(o.offer_l);
  j["offer_r"] = ToJson(o.offer_r);
  j["offer_o"] = o.offer_o ? ToJson(*o.offer_o) : Json(nullptr);
  j["result"] = ToJson(o.result);
  j["winning_policy"] = o.winning_policy;
  j["winning_rent"] = o.winning_rent;
  j["xbar"] = o.xbar ? Json(*o.xbar) : Json(nullptr);
  return j;
}

Json ToJson(const WelfareComparison& c) {
  return {{"u_median_insider", c.u_median_insider},
          {"u_median_outsider", c.u_median_outsider},
          {"u_partyR_insider", c.u_partyR_insider},
          {"u_partyR_outsider", c.u_partyR_outsider},
          {"policy_insider", c.policy_insider},
          {"policy_outsider", c.policy_outsider},
          {"voter_effect", ToString(c.voter_effect)},
          {"party_effect", ToString(c.party_effect)},
          {"polarization_effect", ToString(c.polarization_effect)},
          {"case_insider", c.case_insider.ToString()},
          {"case_outsider", c.case_outsider.ToString()}};
}

Json ToJson(const OracleEquilibrium& eq) {
  Json j;
  j["offer_l"] = ToJson(eq.offer_l);
  j["offer_l_off_path"] = ToJson(eq.offer_l_off_path);
  j["offer_r"] = ToJson(eq.offer_r);
  j["offer_o"] = eq.offer_o ? ToJson(*eq.offer_o) : Json(nullptr);
  j["nominee"] = ToString(eq.nominee);
  j["result"] = ToJson(eq.result);
  j["certified"] = eq.certified;
  return j;
}

Json ToJson(const GameVerification& v) {
  Json j;
  j["game"] = ToString(v.game);
  j["claimed"] = ToJson(v.claimed);
  j["agrees"] = v.agrees();
  j["winner_agrees"] = v.winner_agrees;
  j["policy_error"] = v.policy_error;
  j["rent_error"] = v.rent_error;
  j["tolerance"] = v.tolerance;
  j["matched"] = v.matched ? Json(*v.matched) : Json(nullptr);
  Json eqs = Json::array();
  for (const auto& eq : v.equilibria) eqs.push_back(ToJson(eq));
  j["equilibria"] = std::move(eqs);
  j["discrepancies"] = v.discrepancies;
  return j;
}

std::string SweepCsv(const RegionMap& map) {
  std::string out = kSweepHeader;
  out += '\n';
  for (const RegionCell& cell : map.cells) {
    const std::string a1 = CsvReal(cell.value1);
    const std::string a2 = CsvReal(cell.value2);
    if (!cell.feasible) {
      out += fmt::format("{},{},infeasible,infeasible,infeasible,,,,,,,,,,{}\n",
                         a1, a2, "infeasible");
      continue;
    }
    const WelfareComparison& c = *cell.comparison;
    const EquilibriumOutcome& o = *cell.outsider_outcome;
    out += fmt::format(
        "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", a1, a2,
        c.case_insider.ToString(), c.case_outsider.ToString(),
        WinnerLabel(o.result), CsvReal(o.winning_policy),
        CsvReal(o.winning_rent), CsvReal(c.u_median_insider),
        CsvReal(c.u_median_outsider), CsvReal(c.u_partyR_insider),
        CsvReal(c.u_partyR_outsider), ToString(c.voter_effect),
        ToString(c.party_effect), ToString(c.polarization_effect),
        cell.tags.ToString());
  }
  return out;
}

Json SweepJson(const RegionMap& map) {
  auto axis = [](const Axis& a) {
    return Json{{"field", a.field}, {"lo", a.lo}, {"hi", a.hi},
                {"steps", a.steps}};
  };
  Json cells = Json::array();
  for (const RegionCell& cell : map.cells) {
    Json j;
    j["axis1"] = cell.value1;
    j["axis2"] = cell.value2;
    j["feasible"] = cell.feasible;
    if (cell.feasible) {
      j["comparison"] = ToJson(*cell.comparison);
      j["outsider_outcome"] = ToJson(*cell.outsider_outcome);
      j["welfare_tag"] = cell.tags.ToString();
    } else {
      j["infeasible_reason"] = cell.infeasible_reason;
    }
    cells.push_back(std::move(j));
  }
  return {{"axis1", axis(map.axis1)},
          {"axis2", axis(map.axis2)},
          {"cells", std::move(cells)}};
}

std::string RegionsCsv(const std::vector<PreferenceCell>& cells) {
  std::string out = "V,X,preference\n";
  for (const PreferenceCell& cell : cells) {
    out += fmt::format("{},{},{}\n", CsvReal(cell.V), CsvReal(cell.X),
                       ToString(cell.preference));
  }
  return out;
}

Json RegionsJson(const std::vector<PreferenceCell>& cells) {
  Json out = Json::array();
  for (const PreferenceCell& cell : cells) {
    out.push_back({{"V", cell.V},
                   {"X", cell.X},
                   {"preference", ToString(cell.preference)}});
  }
  return out;
}

}  // namespace nomgame::cli
