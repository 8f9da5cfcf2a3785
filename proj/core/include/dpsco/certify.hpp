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

#ifndef DPSCO_CERTIFY_HPP_
#define DPSCO_CERTIFY_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dpsco/robust_stats.hpp"

// Randomized certification suite for the stability, sensitivity, and
// mechanism-calibration properties the pipeline's privacy argument rests
// on. Each check pins its own trial counts and tolerances.

namespace dpsco {

struct CheckResult {
  std::string name;
  bool passed = false;
  long trials = 0;
  long violations = 0;
  double worst = 0.0;  // worst observed slack or statistic, check-specific
  std::string detail;
};

// Robust-statistic axioms. Containment places outliers up to the
// statistic's own tolerated count (any minority for the median,
// floor(trim_fraction * B) for the trimmed mean); the Lipschitz check uses
// tolerance 1e-12 and the affine check 1e-9 relative. The affine check
// draws a > 0 for the median (the lower-middle convention maps a < 0 to the
// upper-middle statistic) and both signs for the trimmed mean.
CheckResult check_axiom_containment(const RobustStatKind& kind, long trials,
                                    std::uint64_t seed);
CheckResult check_axiom_lipschitz(const RobustStatKind& kind, long trials,
                                  std::uint64_t seed);
CheckResult check_axiom_affine(const RobustStatKind& kind, long trials,
                               std::uint64_t seed);

// |Pi_[a+-r](c) - Pi_[b+-r](d)| <= 1 whenever |a-b| <= 1 and |c-d| <= 1.
CheckResult check_projection_stability(long trials, std::uint64_t seed);

// Joint 1-Lipschitz stability of the debiased estimator (1e-12) and bitwise
// unbiasedness on concentrated inputs.
CheckResult check_estimator_lipschitz(const RobustStatKind& kind, long trials,
                                      std::uint64_t seed);
CheckResult check_estimator_unbiased(const RobustStatKind& kind, long trials,
                                     std::uint64_t seed);

// linf non-expansiveness of the gradient step on random diagonally dominant
// quadratics with eta <= 2/beta, slack 1e-9.
CheckResult check_contractivity(long trials, std::uint64_t seed);

// Coupled neighboring trajectories on (1/tau)-aligned pairs: step-1 gap
// <= eta(4 rho + 2 varsigma), later gaps <= step-1 gap, score gaps <= 2.
CheckResult check_iteration_sensitivity(long runs, std::uint64_t seed);

// One-vector swap moves every concentration score by <= (2B-1)/B.
CheckResult check_score_sensitivity(long runs, std::uint64_t seed);

// i.i.d. data at the default profile passes every step >= 95% of seeds;
// adversarially scattered step-1 gradients halt at step 1 >= 95% of seeds.
CheckResult check_concentration_pass(long seeds, std::uint64_t seed);
CheckResult check_concentration_halt(long seeds, std::uint64_t seed);

// Gaussian sigma matches the closed form to machine precision; Laplace and
// Gaussian samplers pass 3-std-error moment checks at 1e6 draws and a
// Kolmogorov-Smirnov test at significance 0.01 with 1e5 samples.
CheckResult check_gaussian_calibration(std::uint64_t seed);
CheckResult check_sampler_moments(std::uint64_t seed);
CheckResult check_sampler_ks(std::uint64_t seed);

// Geometric-median instability vs coordinate-median stability at
// alpha = 1e-3 and 1e-6.
CheckResult check_counterexample();

// The full lemma suite (everything above, both statistic kinds).
std::vector<CheckResult> run_certification_suite(std::uint64_t seed);

// CSV schema: check,passed,trials,violations,worst,detail.
void write_certification_csv(std::ostream& out,
                             const std::vector<CheckResult>& results);

}  // namespace dpsco

#endif  // DPSCO_CERTIFY_HPP_
