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

#ifndef DPSCO_ROBUST_STATS_HPP_
#define DPSCO_ROBUST_STATS_HPP_

#include <array>
#include <vector>

#include "dpsco/problem.hpp"

namespace dpsco {

enum class RobustStatVariant { kCoordinateMedian, kCoordinateTrimmedMean };

struct RobustStatKind {
  RobustStatVariant variant = RobustStatVariant::kCoordinateMedian;
  double trim_fraction = 0.25;  // trimmed mean only, in [0, 0.5)
};

// Exact order-statistic median. For even counts returns the lower-middle
// order statistic, no interpolation.
double median_1d(std::vector<double> values);

// Sorts, drops floor(trim_fraction * B) elements from each tail, averages
// the rest. 1-Lipschitz under per-element perturbation.
double trimmed_mean_1d(std::vector<double> values, double trim_fraction);

// Coordinate-wise robust statistic over B vectors of equal dimension.
Vec coord_robust_stat(const std::vector<Vec>& vectors,
                      const RobustStatKind& kind);

using Point2 = std::array<double, 2>;

struct WeiszfeldResult {
  Point2 point{0.0, 0.0};
  double objective = 0.0;
  bool converged = false;
  int iterations = 0;
};

// Geometric median of 2-D points via Weiszfeld iteration. Anchor points are
// checked for exact optimality first (the subgradient condition
// ||sum_b w_b (b-a)/||b-a|| || <= w_a), which also covers configurations
// where the plain iteration crawls along a nearly flat valley. An iterate
// coinciding with an anchor is jittered by 1e-9 in a fixed direction.
// On max_iter exhaustion the best iterate is returned with converged=false.
WeiszfeldResult geometric_median_weiszfeld(const std::vector<Point2>& points,
                                           double tol, int max_iter);

}  // namespace dpsco

#endif  // DPSCO_ROBUST_STATS_HPP_
