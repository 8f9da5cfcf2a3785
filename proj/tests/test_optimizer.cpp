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

#include "dpsco/optimizer.hpp"

#include <cmath>
#include <stdexcept>
#include <sstream>

#include "doctest.h"

using namespace dpsco;

TEST_CASE("default parameter formulas at a frozen configuration") {
  const auto cfg = default_params(10000, 100, 16, {1.0, 1e-6}, 1.0, 1.0, 1.0);
  CHECK(cfg.batch_users_B == 3041);
  CHECK(cfg.tau ==
        doctest::Approx(std::log(100.0 * 10000 * 16) / 10.0).epsilon(1e-12));
  CHECK(cfg.varsigma == doctest::Approx(1.0 / cfg.tau).epsilon(1e-12));
  const double steps = std::floor(10000.0 / 3041.0);
  CHECK(cfg.upsilon ==
        doctest::Approx(0.9 * 3041 + 2.0 * std::log(steps / 1e-6))
            .epsilon(1e-12));
  CHECK(cfg.eta <= 2.0);
  CHECK(cfg.eta > 0.0);
}

TEST_CASE("default parameters reject too few users") {
  CHECK_THROWS_AS(default_params(100, 100, 16, {1.0, 1e-6}, 1.0, 1.0, 1.0),
                  InfeasibleConfig);
}

TEST_CASE("epsilon above two is allowed with a warning") {
  std::vector<std::string> warnings;
  default_params(10000, 100, 4, {8.0, 1e-4}, 1.0, 1.0, 1.0, &warnings);
  REQUIRE(!warnings.empty());
  CHECK(warnings.front().find("epsilon") != std::string::npos);
}

TEST_CASE("epsilon override recomputes derived parameters") {
  const auto lo = default_params(10000, 100, 16, {1.0, 1e-6}, 1.0, 1.0, 1.0);
  const auto hi = default_params(10000, 100, 16, {2.0, 1e-6}, 1.0, 1.0, 1.0);
  CHECK(hi.batch_users_B < lo.batch_users_B);
  // ceil(x/2) = ceil(ceil(x)/2) for the batch formula's positive argument.
  CHECK(hi.batch_users_B == (lo.batch_users_B + 1) / 2);
  CHECK(hi.tau == doctest::Approx(lo.tau));  // tau has no epsilon dependence
}

TEST_CASE("robust sgd loop discards remainder users") {
  const auto inst = make_quadratic_instance(2, 25, 4, 3, 1.0);
  DpSgdConfig cfg;
  cfg.batch_users_B = 10;
  cfg.eta = 0.1;
  cfg.tau = 1.0;
  cfg.varsigma = 1.0;
  const SgdTrace trace =
      run_robust_sgd_loop(inst.data, inst.model, cfg, inst.model.center);
  CHECK(trace.iterates.size() == 2);
  CHECK(trace.discarded_users == 5);
  for (const Point& x : trace.iterates) CHECK(in_domain(inst.model, x));
}

TEST_CASE("step size beyond the contractive range is rejected") {
  const auto inst = make_quadratic_instance(2, 20, 4, 3, 1.0);
  DpSgdConfig cfg;
  cfg.batch_users_B = 10;
  cfg.eta = 2.5;  // 2/beta = 2
  cfg.tau = 1.0;
  cfg.varsigma = 1.0;
  CHECK_THROWS_AS(
      run_robust_sgd_loop(inst.data, inst.model, cfg, inst.model.center),
      std::invalid_argument);
}

TEST_CASE("phase returns the start point when the test halts") {
  const auto inst = make_quadratic_instance(2, 20, 4, 3, 1.0);
  DpSgdConfig cfg;
  cfg.budget = {1.0, 0.05};
  cfg.batch_users_B = 10;
  cfg.eta = 0.1;
  cfg.tau = 1.0;
  cfg.varsigma = 1.0;
  cfg.upsilon = 1e9;  // unreachable threshold forces a halt
  cfg.insecure_debug_no_noise = true;
  Rng rng(1);
  const PhaseResult r =
      dpsgd_phase(inst.data, inst.model, cfg, inst.model.center, rng);
  CHECK(!r.log.passed);
  for (std::size_t j = 0; j < r.output.size(); ++j) {
    CHECK(r.output[j] == inst.model.center[j]);
  }
}

TEST_CASE("localization stays in the domain and is deterministic") {
  const auto inst = make_quadratic_instance(2, 64, 8, 9, 1.0);
  DpSgdConfig cfg;
  cfg.budget = {1.0, 0.05};
  cfg.batch_users_B = 8;
  cfg.eta = 0.2;
  cfg.tau = 5.0;
  cfg.varsigma = 0.2;
  cfg.upsilon = 0.0;  // every step passes
  Rng rng1(5), rng2(5);
  const Point a = localize(inst.data, inst.model, cfg, inst.model.center, rng1);
  const Point b = localize(inst.data, inst.model, cfg, inst.model.center, rng2);
  CHECK(in_domain(inst.model, a));
  for (std::size_t j = 0; j < a.size(); ++j) CHECK(a[j] == b[j]);

  Dataset tiny = inst.data;
  tiny.users.resize(10);
  CHECK_THROWS_AS(localize(tiny, inst.model, cfg, inst.model.center, rng1),
                  std::invalid_argument);
}

TEST_CASE("noiseless pipeline converges toward the optimum") {
  const auto inst = make_quadratic_instance(2, 128, 16, 17, 1.0, 0.02);
  DpSgdConfig cfg;
  cfg.budget = {1.0, 0.05};
  cfg.batch_users_B = 16;
  cfg.eta = 1.0;
  cfg.tau = 5.0;
  cfg.varsigma = 0.2;
  cfg.upsilon = 0.0;
  cfg.insecure_debug_no_noise = true;
  Rng rng(5);
  const Point out = localize(inst.data, inst.model, cfg, inst.model.center,
                             rng);
  CHECK(excess_risk(inst.model, out) <
        excess_risk(inst.model, inst.model.center));
}

TEST_CASE("naive baseline stays in the domain") {
  const auto inst = make_quadratic_instance(2, 64, 8, 9, 1.0);
  Rng rng(3);
  const Point out =
      naive_dpsgd_baseline(inst.data, inst.model, {1.0, 1e-4}, 0.5, 4, rng);
  CHECK(in_domain(inst.model, out));
}

TEST_CASE("trajectory csv has the documented header") {
  TrajectoryLog log;
  log.scores = {2.5};
  log.answers = {Answer::kTop};
  std::ostringstream os;
  write_trajectory_csv(os, 1, log, {0.25}, {0.5});
  const std::string text = os.str();
  CHECK(text.rfind("phase,step,score,answer,linf_gap,excess_risk\n", 0) == 0);
  CHECK(text.find("1,1,2.5,top,0.25,0.5") != std::string::npos);
}
