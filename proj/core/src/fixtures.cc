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


#include "nomgame/fixtures.h"

namespace nomgame {

ModelParams MakeParams(double vr, double vo, double k_l, double k_r,
                       double k_o, double b_R) {
  ModelParams p;
  p.b_L = -1.0;
  p.b_R = b_R;
  p.alpha_L = 1.0;
  p.alpha_R = 1.0;
  p.k_l = k_l;
  p.k_r = k_r;
  p.k_o = k_o;
  p.nu_l = 1.0;
  p.nu_r = 1.0 + vr;
  p.nu_o = 1.0 + vo;
  return p;
}

const std::vector<Fixture>& TableFixtures() {
  static const auto* fixtures = [] {
    auto in = [](int i) { return CaseLabel{GameKind::kInsiderOnly, i}; };
    auto out = [](int i) { return CaseLabel{GameKind::kWithOutsider, i}; };
    return new std::vector<Fixture>{
        {"insider-1", in(1), MakeParams(-0.5, -0.3, -0.3, 0.6, 0.3, 1.0)},
        {"insider-2", in(2), MakeParams(0.0, -0.3, -0.3, 0.6, 0.3, 1.0)},
        {"insider-3", in(3), MakeParams(0.4, -0.3, -0.3, 0.6, 0.3, 1.0)},
        {"outsider-1", out(1), MakeParams(-0.5, -0.3, -0.6, 0.5, 0.3, 1.0)},
        {"outsider-2", out(2), MakeParams(-0.3, -0.5, -0.6, 0.5, 0.3, 1.0)},
        {"outsider-3", out(3), MakeParams(-0.4, 0.0, -0.6, 0.5, 0.3, 1.0)},
        {"outsider-4", out(4), MakeParams(0.0, -0.3, -0.6, 0.5, 0.3, 1.0)},
        {"outsider-5", out(5), MakeParams(-0.2, 0.5, -0.1, 0.6, 0.3, 1.0)},
        {"outsider-6", out(6), MakeParams(-0.2, 2.0, -0.1, 0.6, 1.5, 0.5)},
        {"outsider-7", out(7), MakeParams(0.4, -0.3, -0.6, 0.2, 0.3, 1.0)},
        {"outsider-8", out(8), MakeParams(1.2, -0.3, -0.1, 2.0, 0.3, 0.4)},
        {"outsider-9", out(9), MakeParams(0.3, 1.0, -0.5, 0.6, 0.3, 0.8)},
        {"outsider-10", out(10), MakeParams(0.3, 0.2, -0.5, 0.6, 0.3, 0.5)},
        {"outsider-11", out(11), MakeParams(0.7, 0.6, -0.5, 0.3, 0.2, 0.5)},
    };
  }();
  return *fixtures;
}

ModelParams RandomParams(std::mt19937_64& rng) {
  auto u = [&rng](double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  };
  ModelParams p;
  p.b_L = u(-2.0, -0.05);
  p.b_R = u(0.05, 2.0);
  p.alpha_L = u(0.5, 1.5);
  p.alpha_R = u(0.5, 1.5);
  p.k_l = u(-2.0, -0.05);
  p.k_r = u(0.05, 2.0);
  p.k_o = u(0.0, 2.0);
  p.nu_l = u(0.0, 2.0);
  p.nu_r = u(0.0, 2.0);
  p.nu_o = u(0.0, 2.0);
  return p;
}

}  // namespace nomgame
