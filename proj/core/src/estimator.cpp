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

#include "dpsco/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dpsco {

double project_to_interval(double value, double center, double radius) {
  if (radius < 0.0) {
    throw std::invalid_argument("project_to_interval: negative radius");
  }
  return std::clamp(value, center - radius, center + radius);
}

Vec robust_gradient_estimate(const std::vector<Vec>& vectors,
                             const EstimatorConfig& cfg) {
  if (vectors.empty()) {
    throw std::invalid_argument("robust_gradient_estimate: empty input");
  }
  if (cfg.threshold_varsigma < 0.0) {
    throw std::invalid_argument(
        "robust_gradient_estimate: negative threshold");
  }
  const std::size_t d = vectors.front().size();
  const Vec rs = coord_robust_stat(vectors, cfg.kind);

  Vec mean(d, 0.0);
  for (const Vec& v : vectors) {
    if (v.size() != d) {
      throw std::invalid_argument(
          "robust_gradient_estimate: dimension mismatch");
    }
    for (std::size_t j = 0; j < d; ++j) mean[j] += v[j];
  }
  // Plain division keeps the pass-through branch bitwise equal to the
  // textbook sample mean.
  for (double& v : mean) v /= static_cast<double>(vectors.size());

  Vec out(d);
  for (std::size_t j = 0; j < d; ++j) {
    // Pass the mean through when close to the robust statistic; clamp onto
    // the interval around it otherwise. On the boundary both branches agree.
    out[j] = std::abs(rs[j] - mean[j]) < cfg.threshold_varsigma
                 ? mean[j]
                 : project_to_interval(mean[j], rs[j], cfg.threshold_varsigma);
  }
  return out;
}

}  // namespace dpsco
