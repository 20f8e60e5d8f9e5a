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


#ifndef NOMGAME_FIXTURES_H_
#define NOMGAME_FIXTURES_H_

#include <random>
#include <string>
#include <vector>

#include "nomgame/closed_form.h"
#include "nomgame/model.h"

namespace nomgame {

// A parameter vector chosen to land in one row of the equilibrium tables.
struct Fixture {
  std::string name;  // "insider-1", "outsider-9", ...
  CaseLabel expected;
  ModelParams params;
};

// b_L = -1, alpha_L = alpha_R = nu_l = 1; the valences are set so that the
// relative advantages equal vr and vo.
ModelParams MakeParams(double vr, double vo, double k_l, double k_r,
                       double k_o, double b_R);

// Three insider-game rows followed by the eleven outsider-game rows.
const std::vector<Fixture>& TableFixtures();

// Uniform draw over a box of valid parameter vectors.
ModelParams RandomParams(std::mt19937_64& rng);

}  // namespace nomgame

#endif  // NOMGAME_FIXTURES_H_
