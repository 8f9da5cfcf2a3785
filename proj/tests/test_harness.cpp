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

#include "dpsco/harness.hpp"

#include <cmath>
#include <stdexcept>
#include <sstream>

#include "doctest.h"

using namespace dpsco;

namespace {

DpSgdConfig small_cfg(const LossModel& model, int n, int m, int d) {
  DpSgdConfig cfg;
  cfg.budget = {1.0, 0.05};
  cfg.batch_users_B = 10;
  cfg.tau = model.lipschitz_G * std::log(static_cast<double>(n) * m * d) /
            std::sqrt(static_cast<double>(m));
  cfg.varsigma = 1.0 / cfg.tau;
  cfg.eta = 0.01;
  return cfg;
}

}  // namespace

TEST_CASE("identical replacement gives identical datasets and zero gaps") {
  const auto inst = make_quadratic_instance(3, 40, 8, 21, 1.0, 0.02);
  const DpSgdConfig cfg = small_cfg(inst.model, 40, 8, 3);
  NeighborSpec spec;
  spec.swap_user_index = 2;
  spec.replacement = inst.data.users[2];
  Rng rng(1);
  const NeighborPair pair = neighboring_pair(inst.data, inst.model, cfg,
                                             inst.model.center, spec, rng);
  const SensitivityReport report = measure_iteration_sensitivity(
      inst.model, pair, cfg, inst.model.center, 1.0 / cfg.tau);
  CHECK(!report.violated);
  for (double gap : report.per_step_linf_gap) CHECK(gap == 0.0);
  for (double gap : report.score_gaps) CHECK(gap == 0.0);
}

TEST_CASE("aligned pairs respect the base sensitivity bound") {
  const auto inst = make_quadratic_instance(3, 40, 8, 22, 1.0, 0.02);
  const DpSgdConfig cfg = small_cfg(inst.model, 40, 8, 3);
  const double rho = 1.0 / cfg.tau;
  NeighborSpec spec;
  spec.swap_user_index = 0;
  spec.alignment = Alignment::kAligned;
  spec.rho = rho;
  Rng rng(2);
  const NeighborPair pair = neighboring_pair(inst.data, inst.model, cfg,
                                             inst.model.center, spec, rng);
  const SensitivityReport report = measure_iteration_sensitivity(
      inst.model, pair, cfg, inst.model.center, rho);
  CHECK(!report.violated);
  REQUIRE(!report.per_step_linf_gap.empty());
  CHECK(report.per_step_linf_gap.front() <= report.base_gap_bound + 1e-9);
}

TEST_CASE("swap index must land in the first step") {
  const auto inst = make_quadratic_instance(2, 40, 4, 23, 1.0);
  const DpSgdConfig cfg = small_cfg(inst.model, 40, 4, 2);
  NeighborSpec spec;
  spec.swap_user_index = 15;  // >= B
  Rng rng(1);
  CHECK_THROWS_AS(neighboring_pair(inst.data, inst.model, cfg,
                                   inst.model.center, spec, rng),
                  ConstructionFailure);
}

TEST_CASE("adversarial scatter leaves no populated small ball") {
  const auto inst = make_quadratic_instance(3, 40, 8, 24, 1.0, 0.02);
  const DpSgdConfig cfg = small_cfg(inst.model, 40, 8, 3);
  NeighborSpec spec;
  spec.swap_user_index = 0;
  spec.alignment = Alignment::kAdversarialScatter;
  Rng rng(3);
  // The constructor certifies the scatter itself and throws on failure.
  const NeighborPair pair = neighboring_pair(inst.data, inst.model, cfg,
                                             inst.model.center, spec, rng);
  CHECK(pair.base.n() == 40);
  // The swapped dataset differs only at the swap index.
  for (int u = 1; u < 40; ++u) {
    CHECK(pair.base.users[u].samples == pair.swapped.users[u].samples);
  }
  CHECK(pair.base.users[0].samples != pair.swapped.users[0].samples);
}

TEST_CASE("spearman on monotone and tied data") {
  CHECK(spearman({1.0, 2.0, 3.0, 4.0}, {10.0, 20.0, 30.0, 40.0}) ==
        doctest::Approx(1.0));
  CHECK(spearman({1.0, 2.0, 3.0, 4.0}, {40.0, 30.0, 20.0, 10.0}) ==
        doctest::Approx(-1.0));
  CHECK(spearman({1.0, 2.0, 3.0}, {5.0, 5.0, 5.0}) == doctest::Approx(0.0));
  CHECK_THROWS_AS(spearman({1.0}, {2.0}), std::invalid_argument);
}

TEST_CASE("geometric median counterexample flips across the segment") {
  const CounterexampleResult r = counterexample_geometric_median(1e-3);
  CHECK(std::abs(r.median_p[0]) < 1e-6);
  CHECK(std::abs(r.median_p_prime[0] - 1.0) < 1e-6);
  CHECK(r.l2_shift >= 0.9);
  CHECK(r.coord_median_shift <= 1e-3);
  CHECK_THROWS_AS(counterexample_geometric_median(0.0),
                  std::invalid_argument);
}

TEST_CASE("one-point sweep emits one row per seed and pipeline") {
  SweepProfile profile;
  const auto rows = run_utility_experiment({{64, 8}}, 2, {1},
                                           Pipeline::kNonPrivate, profile);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].feasible);
  CHECK(std::isfinite(rows[0].excess_risk));
  std::ostringstream os;
  write_utility_csv(os, rows);
  CHECK(os.str().rfind("nm,n,m,pipeline,seed,excess_risk,feasible,passed\n",
                       0) == 0);
}

TEST_CASE("smallest dimension runs without error") {
  SweepProfile profile;
  for (Pipeline p : {Pipeline::kRobust, Pipeline::kNaiveBaseline,
                     Pipeline::kNonPrivate}) {
    const auto rows = run_utility_experiment({{64, 8}}, 1, {2}, p, profile);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].feasible);
  }
}
