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

#ifndef DPSCO_HARNESS_HPP_
#define DPSCO_HARNESS_HPP_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "dpsco/optimizer.hpp"
#include "dpsco/problem.hpp"
#include "dpsco/robust_stats.hpp"

// Empirical certification machinery: neighboring-dataset construction,
// coupled-trajectory sensitivity probes, bad-user injection, baseline
// comparisons, and the geometric-median instability demo.

namespace dpsco {

class ConstructionFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Alignment { kAligned, kAdversarialScatter, kUnconstrained };

struct NeighborSpec {
  int swap_user_index = 0;  // must land in step 1, i.e. < B
  std::optional<UserRecord> replacement;  // drawn from dist when absent
  Alignment alignment = Alignment::kUnconstrained;
  double rho = 0.0;  // aligned radius; 1/tau when 0
};

struct NeighborPair {
  Dataset base;
  Dataset swapped;
};

// Returns (D, D') identical except for the swapped user. For kAligned the
// construction is verified by direct ball-membership count (>= 2B/3 step-1
// gradients of each side inside a common rho-ball); for kAdversarialScatter
// the step-1 users are rebuilt so their gradients are pairwise farther than
// 2/tau apart, certified by enumerating candidate centers at the B gradient
// points. Throws ConstructionFailure with diagnostics when a requested
// alignment cannot be met.
NeighborPair neighboring_pair(const Dataset& data, const LossModel& model,
                              const DpSgdConfig& cfg, const Point& x0,
                              const NeighborSpec& spec, Rng& rng);

struct SensitivityReport {
  std::vector<double> per_step_linf_gap;
  double base_gap_bound = 0.0;  // eta * (4 rho + 2 varsigma)
  std::vector<double> score_gaps;
  bool violated = false;
};

// Runs the noiseless robust-SGD loop on both datasets with identical
// partitions and records the per-step linf iterate gap and score gap.
// Stability is a property of the deterministic map, so no noise is drawn.
// violated flags any gap exceeding its lemma bound by more than 1e-9.
SensitivityReport measure_iteration_sensitivity(const LossModel& model,
                                                const NeighborPair& pair,
                                                const DpSgdConfig& cfg,
                                                const Point& x0, double rho);

enum class Pipeline { kRobust, kNaiveBaseline, kNonPrivate };

std::string pipeline_name(Pipeline p);

struct UtilityGridPoint {
  int n = 0;
  int m = 0;
};

struct UtilityRow {
  int n = 0;
  int m = 0;
  Pipeline pipeline = Pipeline::kNonPrivate;
  std::uint64_t seed = 0;
  double excess_risk = 0.0;
  bool feasible = true;
  bool passed = true;  // concentration test outcome where applicable
};

// Knobs for desk-scale experiments where the asymptotic profile does not
// fit. The batch is batch_min capped at n/2, so both the step count and
// the localization phase count grow with n; sample_std is chosen so
// user-average gradients concentrate well inside 1/tau.
struct SweepProfile {
  double epsilon = 2.0;
  double delta = 0.05;
  double beta = 1.0;
  int batch_min = 30;  // statistical floor for the concentration test
  double sample_std = 0.05;
  double noise_constant = 6.0;
  int baseline_steps = 4;
  // Extra cap on the derived step size; the formula's constants are tuned
  // for asymptotic n and overshoot badly on small instances.
  double eta_cap = std::numeric_limits<double>::infinity();
};

std::vector<UtilityRow> run_utility_experiment(
    const std::vector<UtilityGridPoint>& grid, int d,
    const std::vector<std::uint64_t>& seeds, Pipeline pipeline,
    const SweepProfile& profile);

// CSV schema: nm,n,m,pipeline,seed,excess_risk,feasible,passed.
void write_utility_csv(std::ostream& out, const std::vector<UtilityRow>& rows);

// Spearman rank correlation; ties averaged.
double spearman(const std::vector<double>& xs, const std::vector<double>& ys);

struct CounterexampleResult {
  Point2 median_p{0.0, 0.0};
  Point2 median_p_prime{0.0, 0.0};
  double l2_shift = 0.0;
  double coord_median_shift = 0.0;  // linf shift of the coordinate median
};

// The instability pair P = {(0,0),(0,0),(1,0),(1,a)},
// P' = {(0,0),(0,a),(1,0),(1,0)}: an O(a) input perturbation moves the
// geometric median across the whole segment while the coordinate-wise
// median moves by at most a.
CounterexampleResult counterexample_geometric_median(double alpha);

}  // namespace dpsco

#endif  // DPSCO_HARNESS_HPP_
