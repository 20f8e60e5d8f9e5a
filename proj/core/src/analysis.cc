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

#include "nomgame/analysis.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

#include <fmt/format.h>

#include "nomgame/parallel.h"

namespace nomgame {

std::string_view ToString(Effect effect) {
  switch (effect) {
    case Effect::kNegative:
      return "Negative";
    case Effect::kNull:
      return "Null";
    case Effect::kPositive:
      return "Positive";
  }
  return "?";
}

std::string_view ToString(Polarization polarization) {
  switch (polarization) {
    case Polarization::kMoreCentrist:
      return "MoreCentrist";
    case Polarization::kUnchanged:
      return "Unchanged";
    case Polarization::kMoreExtreme:
      return "MoreExtreme";
  }
  return "?";
}

std::string_view ToString(VoterWelfareTag tag) {
  switch (tag) {
    case VoterWelfareTag::kCase6:
      return "C-Case6";
    case VoterWelfareTag::kCase9:
      return "C-Case9";
    case VoterWelfareTag::kCase10:
      return "C-Case10";
    case VoterWelfareTag::kCase11:
      return "C-Case11";
  }
  return "?";
}

std::string_view ToString(VoterPreference preference) {
  switch (preference) {
    case VoterPreference::kLeft:
      return "L";
    case VoterPreference::kRight:
      return "R";
    case VoterPreference::kIndifferent:
      return "indifferent";
  }
  return "?";
}

std::string WelfareConditions::ToString() const {
  std::string out;
  if (voter) out = nomgame::ToString(*voter);
  if (party_case11) out += out.empty() ? "C-Case11-party" : "|C-Case11-party";
  return out.empty() ? "none" : out;
}

Effect ClassifyEffect(double insider_value, double outsider_value,
                      double tie_eps) {
  if (insider_value > outsider_value + tie_eps) return Effect::kNegative;
  if (outsider_value > insider_value + tie_eps) return Effect::kPositive;
  return Effect::kNull;
}

WelfareComparison CompareGames(const ModelParams& params, double tie_eps) {
  const EquilibriumOutcome ins = SolveInsider(params, tie_eps);
  const EquilibriumOutcome out = SolveOutsider(params, tie_eps);
  WelfareComparison w;
  w.case_insider = ins.case_label;
  w.case_outsider = out.case_label;
  w.u_median_insider = ExpectedMedianUtility(ins.result, params);
  w.u_median_outsider = ExpectedMedianUtility(out.result, params);
  w.u_partyR_insider = ExpectedPartyUtility(Party::kR, ins.result, params);
  w.u_partyR_outsider = ExpectedPartyUtility(Party::kR, out.result, params);
  w.policy_insider = ins.winning_policy;
  w.policy_outsider = out.winning_policy;
  w.voter_effect =
      ClassifyEffect(w.u_median_insider, w.u_median_outsider, tie_eps);
  w.party_effect =
      ClassifyEffect(w.u_partyR_insider, w.u_partyR_outsider, tie_eps);
  const double before = std::abs(w.policy_insider);
  const double after = std::abs(w.policy_outsider);
  if (after < before - tie_eps) {
    w.polarization_effect = Polarization::kMoreCentrist;
  } else if (after > before + tie_eps) {
    w.polarization_effect = Polarization::kMoreExtreme;
  } else {
    w.polarization_effect = Polarization::kUnchanged;
  }
  return w;
}

WelfareConditions WelfareReductionCondition(const ModelParams& p,
                                            double tie_eps) {
  const int c = ClassifyOutsider(p, tie_eps).index;
  const double vr = p.V_r();
  const double vo = p.V_o();
  const double br = p.b_R;
  const double kr = p.k_r;
  auto lt = [&](double a, double b) { return a < b - tie_eps; };
  auto le = [&](double a, double b) { return a <= b + tie_eps; };
  auto chain = [&](double a, double b, double d, double e) {
    return lt(a, b) && lt(b, d) && lt(d, e);
  };

  WelfareConditions out;
  switch (c) {
    case 6:
      if (lt(p.nu_o, 0.5 * (p.alpha_R * p.nu_r + p.alpha_L * p.nu_l) +
                         2.0 * br)) {
        out.voter = VoterWelfareTag::kCase6;
      }
      break;
    case 9:
      if (le(br, vo) && lt(vo, br - kr + vr) && lt(kr, vr) && lt(vr, br)) {
        out.voter = VoterWelfareTag::kCase9;
      }
      break;
    case 10:
      if (chain(kr, vo, vr, br) || chain(vo, kr, vr, br) ||
          chain(kr, vo, br, vr) || chain(vo, kr, br, vr)) {
        out.voter = VoterWelfareTag::kCase10;
      }
      break;
    case 11:
      if (lt(kr, br) && le(br, vr)) out.voter = VoterWelfareTag::kCase11;
      out.party_case11 = std::abs(std::min(kr, vr) - br) > tie_eps;
      break;
    default:
      break;
  }
  return out;
}

double Axis::Value(int i) const {
  if (steps <= 1) return lo;
  return lo + (hi - lo) * i / (steps - 1);
}

namespace {

constexpr std::array<std::pair<std::string_view, double ModelParams::*>, 10>
    kFields = {{{"b_L", &ModelParams::b_L},
                {"b_R", &ModelParams::b_R},
                {"alpha_L", &ModelParams::alpha_L},
                {"alpha_R", &ModelParams::alpha_R},
                {"k_l", &ModelParams::k_l},
                {"k_r", &ModelParams::k_r},
                {"k_o", &ModelParams::k_o},
                {"nu_l", &ModelParams::nu_l},
                {"nu_r", &ModelParams::nu_r},
                {"nu_o", &ModelParams::nu_o}}};

}  // namespace

bool IsAxisField(std::string_view field) {
  if (field == "V_r" || field == "V_o") return true;
  for (const auto& [name, member] : kFields) {
    if (name == field) return true;
  }
  return false;
}

ModelParams ApplyAxis(ModelParams p, std::string_view field, double value) {
  if (field == "V_r") {
    const double needed = value + p.alpha_L * p.nu_l;
    if (p.alpha_R == 0.0) {
      if (needed != 0.0) {
        throw ModelError(
            fmt::format("V_r={} unreachable with alpha_R = 0", value));
      }
      p.nu_r = 0.0;
    } else {
      p.nu_r = needed / p.alpha_R;
    }
    if (p.nu_r < 0.0) {
      throw ModelError(fmt::format("V_r={} requires nu_r < 0", value));
    }
    return p;
  }
  if (field == "V_o") {
    p.nu_o = value + p.alpha_L * p.nu_l;
    if (p.nu_o < 0.0) {
      throw ModelError(fmt::format("V_o={} requires nu_o < 0", value));
    }
    return p;
  }
  for (const auto& [name, member] : kFields) {
    if (name == field) {
      p.*member = value;
      return p;
    }
  }
  throw ModelError(fmt::format("unknown sweep axis '{}'", field));
}

RegionMap Sweep(const ModelParams& base, const Axis& axis1, const Axis& axis2,
                double tie_eps) {
  if (!IsAxisField(axis1.field) || !IsAxisField(axis2.field)) {
    throw ModelError(fmt::format("unknown sweep axis '{}'",
                                 IsAxisField(axis1.field) ? axis2.field
                                                          : axis1.field));
  }
  if (axis1.steps < 1 || axis2.steps < 1) {
    throw ModelError("sweep axes need at least one step");
  }
  RegionMap map{axis1, axis2, {}};
  const auto n2 = static_cast<std::size_t>(axis2.steps);
  map.cells.resize(static_cast<std::size_t>(axis1.steps) * n2);
  ParallelFor(map.cells.size(), [&](std::size_t k) {
    RegionCell& cell = map.cells[k];
    cell.value1 = axis1.Value(static_cast<int>(k / n2));
    cell.value2 = axis2.Value(static_cast<int>(k % n2));
    try {
      ModelParams p = ApplyAxis(base, axis1.field, cell.value1);
      p = ApplyAxis(p, axis2.field, cell.value2);
      Validate(p);
      cell.comparison = CompareGames(p, tie_eps);
      cell.outsider_outcome = SolveOutsider(p, tie_eps);
      cell.tags = WelfareReductionCondition(p, tie_eps);
      cell.feasible = true;
    } catch (const ModelError& e) {
      cell.feasible = false;
      cell.infeasible_reason = e.what();
    }
  });
  return map;
}

VoterPreference ClassifyPreference(double V, double X, double tie_eps) {
  if (X > V + tie_eps) return VoterPreference::kLeft;
  if (X < V - tie_eps) return VoterPreference::kRight;
  return VoterPreference::kIndifferent;
}

std::vector<PreferenceCell> MedianVoterIndifferenceRegion(int resolution,
                                                          double lo, double hi,
                                                          double tie_eps) {
  if (resolution < 1) throw ModelError("resolution >= 1");
  const Axis axis{"", lo, hi, resolution};
  std::vector<PreferenceCell> cells;
  cells.reserve(static_cast<std::size_t>(resolution) * resolution);
  for (int i = 0; i < resolution; ++i) {
    for (int j = 0; j < resolution; ++j) {
      const double v = axis.Value(i);
      const double x = axis.Value(j);
      cells.push_back({v, x, ClassifyPreference(v, x, tie_eps)});
    }
  }
  return cells;
}

}  // namespace nomgame
