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

#include <benchmark/benchmark.h>

#include <cmath>

#include "dpsco/concentration.hpp"
#include "dpsco/estimator.hpp"
#include "dpsco/optimizer.hpp"
#include "dpsco/problem.hpp"

namespace {

using namespace dpsco;

std::vector<Vec> random_gradients(int b, int d, std::uint64_t seed) {
  Rng rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Vec> out(b, Vec(d));
  for (auto& v : out) {
    for (double& x : v) x = gauss(rng);
  }
  return out;
}

void BM_RobustEstimate(benchmark::State& state) {
  const int b = static_cast<int>(state.range(0));
  const auto grads = random_gradients(b, 16, 1);
  const EstimatorConfig cfg{1.0, {RobustStatVariant::kCoordinateMedian, 0.0}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(robust_gradient_estimate(grads, cfg));
  }
  state.SetComplexityN(b);
}
BENCHMARK(BM_RobustEstimate)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_ConcentrationScore(benchmark::State& state) {
  const int b = static_cast<int>(state.range(0));
  const auto grads = random_gradients(b, 16, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(concentration_score(grads, 3.0));
  }
  state.SetComplexityN(b);
}
BENCHMARK(BM_ConcentrationScore)
    ->RangeMultiplier(4)
    ->Range(16, 1024)
    ->Complexity();

void BM_SgdPhase(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto inst = make_quadratic_instance(8, n, 16, 3, 1.0, 0.05);
  DpSgdConfig cfg;
  cfg.budget = {1.0, 0.05};
  cfg.batch_users_B = n / 4;
  cfg.eta = 0.05;
  cfg.tau = 4.0;
  cfg.varsigma = 0.25;
  cfg.upsilon = 0.0;
  for (auto _ : state) {
    Rng rng(7);
    benchmark::DoNotOptimize(
        dpsgd_phase(inst.data, inst.model, cfg, inst.model.center, rng));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_SgdPhase)->RangeMultiplier(2)->Range(64, 512)->Complexity();

}  // namespace

BENCHMARK_MAIN();
