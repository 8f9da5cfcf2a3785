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

#include "dpsco/concentration.hpp"

#include <cmath>
#include <stdexcept>

namespace dpsco {

namespace {

double linf_dist(const Vec& a, const Vec& b) {
  double best = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    best = std::max(best, std::abs(a[k] - b[k]));
  }
  return best;
}

}  // namespace

double concentration_score(const std::vector<Vec>& gradients, double tau) {
  if (gradients.empty()) {
    throw std::invalid_argument("concentration_score: empty input");
  }
  if (tau <= 0.0) {
    throw std::invalid_argument("concentration_score: tau must be > 0");
  }
  const std::size_t b = gradients.size();
  // Unordered pairs once, doubled; the B self-pairs contribute exp(0) each.
  double acc = static_cast<double>(b);
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = i + 1; j < b; ++j) {
      acc += 2.0 * std::exp(-tau * linf_dist(gradients[i], gradients[j]));
    }
  }
  return acc / static_cast<double>(b);
}

std::vector<Answer> run_concentration_test(
    const std::vector<std::vector<Vec>>& per_step_gradients,
    const ConcentrationConfig& cfg, Rng& rng) {
  if (per_step_gradients.empty()) {
    throw std::invalid_argument("run_concentration_test: empty stream");
  }
  const std::size_t b = per_step_gradients.front().size();
  for (const auto& step : per_step_gradients) {
    if (step.size() != b) {
      throw std::invalid_argument("run_concentration_test: ragged stream");
    }
  }
  // The score moves by at most 2 under a one-user swap; the comparator
  // assumes sensitivity-1 queries, so everything is halved.
  AboveThreshold comparator(cfg.upsilon / 2.0, cfg.epsilon_share, rng,
                            cfg.insecure_debug_no_noise);
  std::vector<Answer> answers;
  answers.reserve(per_step_gradients.size());
  for (const auto& step : per_step_gradients) {
    const double score = concentration_score(step, cfg.tau);
    const Answer a = comparator.query(score / 2.0, rng);
    answers.push_back(a);
    if (a == Answer::kBottom) break;
  }
  return answers;
}

}  // namespace dpsco
