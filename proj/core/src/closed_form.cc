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

#include "nomgame/closed_form.h"

#include <algorithm>
#include <cmath>
#include <string>

#include <fmt/format.h>

namespace nomgame {

std::string_view ToString(GameKind game) {
  return game == GameKind::kInsiderOnly ? "InsiderOnly" : "WithOutsider";
}

std::string CaseLabel::ToString() const {
  return fmt::format("{}/{}", nomgame::ToString(game), index);
}

namespace {

// Comparisons with an absolute tie band.
struct Cmp {
  double eps;
  bool Lt(double a, double b) const { return a < b - eps; }
  bool Le(double a, double b) const { return a <= b + eps; }
  bool Eq(double a, double b) const { return std::abs(a - b) <= eps; }
};

using Kind = ElectionResult::Kind;

EquilibriumOutcome MakeOutcome(CaseLabel label, Platform offer_l,
                               Platform offer_r, std::optional<Platform> offer_o,
                               ElectionResult result) {
  EquilibriumOutcome out{label,  offer_l, offer_r, offer_o,
                         result, 0.0,     0.0,     std::nullopt};
  out.winning_policy = result.ExpectedPolicy();
  out.winning_rent = result.ExpectedRent();
  return out;
}

// Rents derived from the limit argument are non-negative in exact
// arithmetic; only rounding noise is clipped.
double CheckedRent(double rent, int case_index) {
  if (rent < -1e-9) {
    throw ConsistencyError(fmt::format(
        "negative outsider rent {} in case {}", rent, case_index));
  }
  return std::max(rent, 0.0);
}

double Midpoint(double a, double b) { return 0.5 * (a + b); }

}  // namespace

CaseLabel ClassifyInsider(const ModelParams& params, double tie_eps) {
  const Cmp c{tie_eps};
  const double vr = params.V_r();
  int index = 3;
  if (c.Lt(vr, 0.0)) {
    index = 1;
  } else if (c.Eq(vr, 0.0)) {
    index = 2;
  }
  return {GameKind::kInsiderOnly, index};
}

EquilibriumOutcome SolveInsider(const ModelParams& p, double tie_eps) {
  Validate(p);
  const CaseLabel label = ClassifyInsider(p, tie_eps);
  const double vr = p.V_r();
  const Platform null = Platform::Null();
  switch (label.index) {
    case 1: {
      const Platform l{std::max(p.k_l, vr), 0.0};
      return MakeOutcome(label, l, null, std::nullopt,
                         {Kind::kLeftWins, LeftTicket(l.policy),
                          InsiderTicket(0.0)});
    }
    case 2:
      return MakeOutcome(label, null, null, std::nullopt,
                         {Kind::kLottery, LeftTicket(0.0), InsiderTicket(0.0)});
    default: {
      const Platform r{std::min(p.k_r, vr), 0.0};
      return MakeOutcome(label, null, r, std::nullopt,
                         {Kind::kRightWins, LeftTicket(0.0),
                          InsiderTicket(r.policy)});
    }
  }
}

double Xbar(const ModelParams& p) {
  return Midpoint(std::min(p.b_R, p.V_r()), std::min(p.b_R, p.V_o()));
}

CaseLabel ClassifyOutsider(const ModelParams& p, double tie_eps) {
  const Cmp c{tie_eps};
  const double vr = p.V_r();
  const double vo = p.V_o();
  const double br = p.b_R;
  const double mid_o = Midpoint(std::max(p.k_l, vr), std::min(p.k_o, vo));
  const double mid_r = Midpoint(std::max(p.k_l, vo), std::min(p.k_r, vr));
  auto label = [](int i) { return CaseLabel{GameKind::kWithOutsider, i}; };
  auto check_xbar = [&](int i) {
    // Implied by the valence conditions of rows 9 and 10.
    if (!(Xbar(p) < br + tie_eps)) {
      throw ConsistencyError(
          fmt::format("xbar >= b_R under case {} conditions", i));
    }
    return label(i);
  };

  if (c.Le(vr, vo) && c.Lt(vo, 0.0)) return label(1);
  if (c.Le(vo, vr) && c.Lt(vr, 0.0)) return label(2);
  if (c.Lt(vr, 0.0) && c.Eq(vo, 0.0)) return label(3);
  if (c.Le(vo, 0.0) && c.Eq(vr, 0.0)) return label(4);
  if (c.Le(vr, 0.0) && c.Lt(0.0, vo)) {
    return label(c.Le(mid_o, br) ? 5 : 6);
  }
  if (c.Le(vo, 0.0) && c.Lt(0.0, vr)) {
    return label(c.Le(mid_r, br) ? 7 : 8);
  }
  if (c.Lt(0.0, vr) && ((c.Lt(vr, br) && c.Le(br, vo)) ||
                        (c.Lt(vr, vo) && c.Lt(vo, br)))) {
    return check_xbar(9);
  }
  // Row 10 also takes 0 < V_r = V_o < b_R, where the party's preference
  // for its insider breaks the tie between identical offers.
  if (c.Lt(0.0, vo) && c.Le(vo, vr) && c.Lt(vo, br)) return check_xbar(10);
  if (c.Le(br, vo) && c.Le(br, vr)) return label(11);
  throw ConsistencyError(fmt::format(
      "no case matches V_r={} V_o={} b_R={}", vr, vo, br));
}

EquilibriumOutcome SolveOutsider(const ModelParams& p, double tie_eps) {
  Validate(p);
  const CaseLabel label = ClassifyOutsider(p, tie_eps);
  const double vr = p.V_r();
  const double vo = p.V_o();
  const double br = p.b_R;
  const double left_vs_r = std::max(p.k_l, vr);
  const double left_vs_o = std::max(p.k_l, vo);
  const Platform null = Platform::Null();

  auto left_wins = [&](double x_l, MatchTicket right) {
    return MakeOutcome(label, {x_l, 0.0}, null, null,
                       {Kind::kLeftWins, LeftTicket(x_l), right});
  };
  auto outsider_wins = [&](Platform o) {
    return MakeOutcome(label, null, null, o,
                       {Kind::kRightWins, LeftTicket(0.0), OutsiderTicket(o)});
  };
  auto insider_wins = [&](double x_r) {
    return MakeOutcome(label, null, {x_r, 0.0}, null,
                       {Kind::kRightWins, LeftTicket(0.0), InsiderTicket(x_r)});
  };

  switch (label.index) {
    case 1:
      return left_wins(left_vs_o, OutsiderTicket(null));
    case 2:
      return left_wins(left_vs_r, InsiderTicket(0.0));
    case 3: {
      const Platform o{0.0, CheckedRent(2.0 * std::abs(left_vs_r), 3)};
      return MakeOutcome(label, null, null, o,
                         {Kind::kLottery, LeftTicket(0.0), OutsiderTicket(o)});
    }
    case 4:
      return MakeOutcome(label, null, null, null,
                         {Kind::kLottery, LeftTicket(0.0), InsiderTicket(0.0)});
    case 5: {
      const double x_o = std::min(p.k_o, vo);
      const double rent =
          std::abs(left_vs_r - br) - std::abs(x_o - br);
      return outsider_wins({x_o, CheckedRent(rent, 5)});
    }
    case 6:
      return outsider_wins({2.0 * br - left_vs_r, 0.0});
    case 7:
      return insider_wins(std::min(p.k_r, vr));
    case 8:
      return insider_wins(2.0 * br - left_vs_o);
    case 9: {
      const double x_o = std::min(br, vo);
      const double rent =
          std::abs(std::min(br, vr) - br) - std::abs(x_o - br);
      EquilibriumOutcome out = outsider_wins({x_o, CheckedRent(rent, 9)});
      out.xbar = Xbar(p);
      return out;
    }
    case 10: {
      EquilibriumOutcome out = insider_wins(std::min(br, vr));
      out.xbar = Xbar(p);
      return out;
    }
    default:
      return insider_wins(br);
  }
}

EquilibriumOutcome Solve(GameKind game, const ModelParams& params,
                         double tie_eps) {
  return game == GameKind::kInsiderOnly ? SolveInsider(params, tie_eps)
                                        : SolveOutsider(params, tie_eps);
}

double CaseNineRentKoVariant(const ModelParams& p) {
  const double br = p.b_R;
  return std::abs(std::min(br, p.V_r()) - br) -
         std::abs(std::min(p.k_o, p.V_o()) - br);
}

double CaseTenInsiderBestResponse(const ModelParams& p) {
  const double vo = p.V_o();
  return std::clamp(p.k_r, vo, std::min(p.V_r(), 2.0 * p.b_R - vo));
}

double CaseBoundaryDistance(GameKind game, const ModelParams& p) {
  const double vr = p.V_r();
  const double vo = p.V_o();
  if (game == GameKind::kInsiderOnly) return std::abs(vr);
  const double br = p.b_R;
  double d = std::min(std::abs(vr), std::abs(vo));
  if ((vr < 0.0 && vo < 0.0) || (vr > 0.0 && vo > 0.0)) {
    d = std::min(d, std::abs(vr - vo));
  }
  if (vr <= 0.0 && vo > 0.0) {
    const double mid = Midpoint(std::max(p.k_l, vr), std::min(p.k_o, vo));
    d = std::min(d, std::abs(mid - br));
  }
  if (vo <= 0.0 && vr > 0.0) {
    const double mid = Midpoint(std::max(p.k_l, vo), std::min(p.k_r, vr));
    d = std::min(d, std::abs(mid - br));
  }
  if (vr > 0.0 && vo > 0.0) {
    d = std::min({d, std::abs(vr - br), std::abs(vo - br)});
  }
  return d;
}

}  // namespace nomgame
