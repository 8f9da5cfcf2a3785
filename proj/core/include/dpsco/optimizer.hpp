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

#ifndef DPSCO_OPTIMIZER_HPP_
#define DPSCO_OPTIMIZER_HPP_

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "dpsco/concentration.hpp"
#include "dpsco/estimator.hpp"
#include "dpsco/privacy.hpp"
#include "dpsco/problem.hpp"

namespace dpsco {

class InfeasibleConfig : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DpSgdConfig {
  PrivacyBudget budget;
  double eta = 0.0;       // step size, <= 2/beta for the active model
  double tau = 1.0;       // inverse-distance scale of the score
  double varsigma = 1.0;  // estimator threshold; 1/tau in the default profile
  double upsilon = 0.0;   // concentration-test threshold
  int batch_users_B = 1;
  RobustStatKind kind;
  double noise_constant = 6.0;  // multiplier inside the phase noise scale
  bool insecure_debug_no_noise = false;
};

struct TrajectoryLog {
  std::vector<Point> iterates;          // x_1 .. x_T
  std::vector<Vec> gradient_estimates;  // g_0 .. g_{T-1}
  std::vector<double> scores;           // s_1 .. s_T
  std::vector<Answer> answers;          // truncated at the first kBottom
  bool passed = false;
  int discarded_users = 0;
};

// Deterministic robust-SGD pass: partitions users step-major (step t uses
// users[(t-1)*B .. t*B)), estimates each step's gradient with the debiased
// robust estimator, records everything. No noise anywhere; this is the map
// whose stability the sensitivity harness probes.
struct SgdTrace {
  std::vector<Point> iterates;
  std::vector<Vec> gradient_estimates;
  std::vector<std::vector<Vec>> per_step_gradients;  // B user-avg gradients
  std::vector<double> scores;
  Point average;
  int discarded_users = 0;
};

SgdTrace run_robust_sgd_loop(const Dataset& data, const LossModel& model,
                             const DpSgdConfig& cfg, const Point& x0);

struct PhaseResult {
  Point output;
  TrajectoryLog log;
};

// One robust SGD phase: the loop above, then the post-hoc concentration test
// (epsilon/2 of the budget) on the stored per-step gradients. Returns the
// average iterate on an all-top answer sequence, the initial point
// otherwise. Users beyond the largest multiple of B are discarded.
PhaseResult dpsgd_phase(const Dataset& data, const LossModel& model,
                        const DpSgdConfig& cfg, const Point& x0, Rng& rng);

// Localization outer loop: S = floor(log2(n/B)) phases on disjoint user
// subsets of size n/2^s with step size eta / max(ln m, 2)^s, each phase's
// average iterate privatized with per-coordinate Gaussian noise
//   sigma_s = noise_constant * eta_s * G * sqrt(d ln(e^eps/delta) ln(nmd))
//             / (sqrt(m) * eps).
Point localize(const Dataset& data, const LossModel& model,
               const DpSgdConfig& cfg, const Point& x0, Rng& rng);

// Default profile: B = ceil(100 ln(mnd/delta)/eps),
// tau = G ln(nmd)/sqrt(m), varsigma = 1/tau,
// upsilon = 0.9B + 2 ln(T/delta)/eps,
// eta = (D/G) min{B sqrt(m)/sqrt(n), sqrt(m) eps / sqrt(d ln(1/delta)
// ln(nmd))}, additionally capped at 2/beta. Throws InfeasibleConfig when
// n < B. Warnings (eps > 2, beta beyond the admissible range) are appended
// to *warnings when given.
DpSgdConfig default_params(int n, int m, int d, const PrivacyBudget& budget,
                           double G, double D, double beta,
                           std::vector<std::string>* warnings = nullptr);

// Derived-parameter echo lines with formula provenance, for logs.
std::vector<std::string> describe_params(const DpSgdConfig& cfg, int n, int m,
                                         int d);

// Per-step Gaussian mechanism baseline: n/steps users per step, per-step
// l2 sensitivity 2 G sqrt(d) / B, per-step budget
// (eps / (2 sqrt(2 steps ln(2/delta))), delta / (2 steps)) via advanced
// composition.
Point naive_dpsgd_baseline(const Dataset& data, const LossModel& model,
                           const PrivacyBudget& budget, double eta, int steps,
                           Rng& rng, bool insecure_debug_no_noise = false);

// CSV schema: phase,step,score,answer,linf_gap,excess_risk (header row
// included; linf_gap and excess_risk may be nan when not measured).
void write_trajectory_csv(std::ostream& out, int phase,
                          const TrajectoryLog& log,
                          const std::vector<double>& linf_gaps,
                          const std::vector<double>& excess_risks);

}  // namespace dpsco

#endif  // DPSCO_OPTIMIZER_HPP_
