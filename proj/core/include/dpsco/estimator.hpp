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

#ifndef DPSCO_ESTIMATOR_HPP_
#define DPSCO_ESTIMATOR_HPP_

#include <vector>

#include "dpsco/problem.hpp"
#include "dpsco/robust_stats.hpp"

namespace dpsco {

struct EstimatorConfig {
  double threshold_varsigma = 0.0;  // >= 0, gradient units
  RobustStatKind kind;
};

// clamp(value, center - radius, center + radius); idempotent.
double project_to_interval(double value, double center, double radius);

// Debiased robust gradient estimate. Per coordinate: output the mean when it
// is within varsigma of the robust statistic, else clamp the mean onto the
// interval around the robust statistic. The output always lies in
// B_inf(robust statistic, varsigma) and equals the exact mean bitwise when
// every coordinate is close.
Vec robust_gradient_estimate(const std::vector<Vec>& vectors,
                             const EstimatorConfig& cfg);

}  // namespace dpsco

#endif  // DPSCO_ESTIMATOR_HPP_
