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

#include "dpsco/privacy.hpp"

#include <cmath>
#include <stdexcept>

namespace dpsco {

double laplace_sample(double scale, Rng& rng) {
  if (scale <= 0.0) {
    throw std::invalid_argument("laplace_sample: scale must be > 0");
  }
  // Inverse CDF on a single uniform draw; one draw per sample keeps the
  // reproducibility contract simple.
  std::uniform_real_distribution<double> uniform(-0.5, 0.5);
  const double u = uniform(rng);
  return -scale * std::copysign(1.0, u) * std::log1p(-2.0 * std::abs(u));
}

double gaussian_mechanism_sigma(double l2_sensitivity,
                                const PrivacyBudget& budget) {
  if (budget.epsilon <= 0.0) {
    throw std::invalid_argument("gaussian_mechanism: epsilon must be > 0");
  }
  if (budget.delta <= 0.0) {
    throw std::invalid_argument(
        "gaussian_mechanism: delta must be > 0 (unsupported otherwise)");
  }
  if (l2_sensitivity < 0.0) {
    throw std::invalid_argument("gaussian_mechanism: negative sensitivity");
  }
  return l2_sensitivity * std::sqrt(2.0 * std::log(1.25 / budget.delta)) /
         budget.epsilon;
}

Vec gaussian_mechanism(const Vec& v, double l2_sensitivity,
                       const PrivacyBudget& budget, Rng& rng) {
  const double sigma = gaussian_mechanism_sigma(l2_sensitivity, budget);
  if (sigma == 0.0) return v;
  Vec out(v.size());
  std::normal_distribution<double> gauss(0.0, sigma);
  for (std::size_t j = 0; j < v.size(); ++j) out[j] = v[j] + gauss(rng);
  return out;
}

AboveThreshold::AboveThreshold(double threshold, double epsilon, Rng& rng,
                               bool insecure_debug_no_noise)
    : epsilon_(epsilon), debug_no_noise_(insecure_debug_no_noise) {
  if (epsilon <= 0.0) {
    throw std::invalid_argument("AboveThreshold: epsilon must be > 0");
  }
  noisy_threshold_ =
      debug_no_noise_ ? threshold
                      : threshold - laplace_sample(2.0 / epsilon_, rng);
}

Answer AboveThreshold::query(double q_value, Rng& rng) {
  if (halted_) {
    throw std::logic_error("AboveThreshold: query on a halted state");
  }
  const double nu =
      debug_no_noise_ ? 0.0 : laplace_sample(4.0 / epsilon_, rng);
  ++queries_answered_;
  if (q_value + nu < noisy_threshold_) {
    halted_ = true;
    return Answer::kBottom;
  }
  return Answer::kTop;
}

}  // namespace dpsco
