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

#ifndef DPSCO_PRIVACY_HPP_
#define DPSCO_PRIVACY_HPP_

#include <vector>

#include "dpsco/problem.hpp"

// Noise primitives and DP mechanisms. The floating-point Laplace and
// Gaussian samplers here are calibrated for the stated (epsilon, delta)
// guarantees but are NOT hardened against floating-point attacks
// (no snapping); see the README.

namespace dpsco {

struct PrivacyBudget {
  double epsilon = 1.0;  // > 0
  double delta = 0.0;    // in [0, 1)
};

// Laplace(scale) draw via inverse CDF on a single uniform.
double laplace_sample(double scale, Rng& rng);

// v + N(0, sigma^2 I) with sigma = l2_sensitivity * sqrt(2 ln(1.25/delta))
// / epsilon (equality calibration). Zero sensitivity returns v unchanged
// without consuming randomness. delta must be positive.
Vec gaussian_mechanism(const Vec& v, double l2_sensitivity,
                       const PrivacyBudget& budget, Rng& rng);

double gaussian_mechanism_sigma(double l2_sensitivity,
                                const PrivacyBudget& budget);

enum class Answer { kTop, kBottom };

// Stateful noisy-threshold comparator over a stream of sensitivity-1
// queries. Construction fixes the noisy threshold
// threshold - Lap(2/epsilon); each query adds Lap(4/epsilon) and the first
// below-threshold answer halts the state for good.
//
// Sequentially stateful and single-owner: queries must be issued in order
// from one logical thread of control.
class AboveThreshold {
 public:
  // insecure_debug_no_noise zeroes all noise for deterministic tests; never
  // private.
  AboveThreshold(double threshold, double epsilon, Rng& rng,
                 bool insecure_debug_no_noise = false);

  // Returns kBottom and halts when q_value + Lap(4/epsilon) falls below the
  // noisy threshold. Throws std::logic_error on a halted state.
  Answer query(double q_value, Rng& rng);

  bool halted() const { return halted_; }
  int queries_answered() const { return queries_answered_; }
  double noisy_threshold() const { return noisy_threshold_; }

 private:
  double noisy_threshold_;
  double epsilon_;
  bool debug_no_noise_;
  bool halted_ = false;
  int queries_answered_ = 0;
};

}  // namespace dpsco

#endif  // DPSCO_PRIVACY_HPP_
