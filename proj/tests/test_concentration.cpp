//
// Copyright 2026 The dpsco Authors
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
//

#include "dpsco/concentration.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"

using namespace dpsco;

TEST_CASE("score of identical gradients equals B") {
  const std::vector<Vec> same{{1.0, 2.0}, {1.0, 2.0}, {1.0, 2.0}};
  CHECK(concentration_score(same, 3.0) == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("score frozen example at B=2") {
  // Two gradients at linf distance 1, tau=1: s = 1 + e^{-1}.
  const std::vector<Vec> grads{{0.0}, {1.0}};
  CHECK(concentration_score(grads, 1.0) ==
        doctest::Approx(1.3678794411714423).epsilon(1e-15));
}

TEST_CASE("score stays within [1, B]") {
  const std::vector<Vec> far{{0.0}, {1e9}, {-1e9}, {5e8}};
  const double s = concentration_score(far, 1.0);
  CHECK(s >= 1.0);
  CHECK(s <= 4.0);
  CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("score input validation") {
  CHECK_THROWS_AS(concentration_score({}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(concentration_score({{1.0}}, 0.0), std::invalid_argument);
}

TEST_CASE("test truncates at the first below-threshold answer") {
  ConcentrationConfig cfg;
  cfg.tau = 1.0;
  cfg.upsilon = 2.5;  // scores of 3 identical gradients (3.0) pass
  cfg.epsilon_share = 1.0;
  cfg.insecure_debug_no_noise = true;

  const std::vector<Vec> tight{{0.0}, {0.0}, {0.0}};
  const std::vector<Vec> spread{{0.0}, {100.0}, {-100.0}};
  Rng rng(1);
  const auto answers =
      run_concentration_test({tight, spread, tight}, cfg, rng);
  REQUIRE(answers.size() == 2);  // third step never queried
  CHECK(answers[0] == Answer::kTop);
  CHECK(answers[1] == Answer::kBottom);
}

TEST_CASE("all-top streams answer every step") {
  ConcentrationConfig cfg;
  cfg.tau = 1.0;
  cfg.upsilon = 1.5;
  cfg.epsilon_share = 1.0;
  cfg.insecure_debug_no_noise = true;
  const std::vector<Vec> tight{{0.0}, {0.01}};
  Rng rng(1);
  const auto answers = run_concentration_test({tight, tight}, cfg, rng);
  REQUIRE(answers.size() == 2);
  CHECK(answers[0] == Answer::kTop);
  CHECK(answers[1] == Answer::kTop);
}
