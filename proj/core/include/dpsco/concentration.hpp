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

#ifndef DPSCO_CONCENTRATION_HPP_
#define DPSCO_CONCENTRATION_HPP_

#include <vector>

#include "dpsco/privacy.hpp"
#include "dpsco/problem.hpp"

namespace dpsco {

struct ConcentrationConfig {
  double tau = 1.0;            // > 0, inverse gradient units
  double upsilon = 0.0;        // threshold, score units
  double epsilon_share = 1.0;  // budget devoted to the test
  bool insecure_debug_no_noise = false;
};

// Smoothed concentration score
//   s = (1/B) sum_i sum_j exp(-tau * ||g_i - g_j||_inf)
// over all ordered pairs including self-pairs; always in [1, B]. Replacing
// one vector moves the score by at most (2B-1)/B.
double concentration_score(const std::vector<Vec>& gradients, double tau);

// Feeds the per-step scores to one AboveThreshold state. The score has
// sensitivity at most 2 under a one-user swap while the comparator assumes
// sensitivity-1 queries, so queries are fed as s/2 against threshold
// upsilon/2. The answer list is truncated at the first kBottom; all-kTop
// means pass.
std::vector<Answer> run_concentration_test(
    const std::vector<std::vector<Vec>>& per_step_gradients,
    const ConcentrationConfig& cfg, Rng& rng);

}  // namespace dpsco

#endif  // DPSCO_CONCENTRATION_HPP_
