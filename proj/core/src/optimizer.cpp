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

#include "dpsco/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>

namespace dpsco {

namespace {

void validate_loop_args(const Dataset& data, const LossModel& model,
                        const DpSgdConfig& cfg, const Point& x0) {
  if (cfg.batch_users_B < 1) {
    throw std::invalid_argument("dpsgd: batch_users_B must be >= 1");
  }
  if (data.n() < cfg.batch_users_B) {
    throw std::invalid_argument("dpsgd: fewer users than one batch");
  }
  if (model.smooth_beta > 0.0 && cfg.eta > 2.0 / model.smooth_beta) {
    throw std::invalid_argument(
        "dpsgd: eta exceeds the contractivity precondition 2/beta");
  }
  if (!in_domain(model, x0)) {
    throw std::invalid_argument("dpsgd: x0 outside the domain");
  }
}

Point average_points(const std::vector<Point>& points) {
  Point avg(points.front().size(), 0.0);
  for (const Point& p : points) {
    for (std::size_t j = 0; j < avg.size(); ++j) avg[j] += p[j];
  }
  const double inv = 1.0 / static_cast<double>(points.size());
  for (double& v : avg) v *= inv;
  return avg;
}

}  // namespace

SgdTrace run_robust_sgd_loop(const Dataset& data, const LossModel& model,
                             const DpSgdConfig& cfg, const Point& x0) {
  validate_loop_args(data, model, cfg, x0);
  const int b = cfg.batch_users_B;
  const int steps = data.n() / b;

  SgdTrace trace;
  trace.discarded_users = data.n() - steps * b;
  trace.iterates.reserve(steps);
  trace.per_step_gradients.reserve(steps);
  trace.scores.reserve(steps);

  EstimatorConfig est_cfg{cfg.varsigma, cfg.kind};
  Point x = x0;
  for (int t = 0; t < steps; ++t) {
    std::vector<Vec> grads;
    grads.reserve(b);
    for (int i = 0; i < b; ++i) {
      grads.push_back(user_avg_gradient(model, data.users[t * b + i], x));
    }
    const Vec g = robust_gradient_estimate(grads, est_cfg);
    Point next(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) next[j] = x[j] - cfg.eta * g[j];
    x = project_linf(next, model.center, model.radius_D);

    trace.scores.push_back(concentration_score(grads, cfg.tau));
    trace.per_step_gradients.push_back(std::move(grads));
    trace.gradient_estimates.push_back(g);
    trace.iterates.push_back(x);
  }
  trace.average = average_points(trace.iterates);
  return trace;
}

PhaseResult dpsgd_phase(const Dataset& data, const LossModel& model,
                        const DpSgdConfig& cfg, const Point& x0, Rng& rng) {
  SgdTrace trace = run_robust_sgd_loop(data, model, cfg, x0);

  ConcentrationConfig test_cfg;
  test_cfg.tau = cfg.tau;
  test_cfg.upsilon = cfg.upsilon;
  test_cfg.epsilon_share = cfg.budget.epsilon / 2.0;
  test_cfg.insecure_debug_no_noise = cfg.insecure_debug_no_noise;
  std::vector<Answer> answers =
      run_concentration_test(trace.per_step_gradients, test_cfg, rng);

  PhaseResult result;
  result.log.iterates = std::move(trace.iterates);
  result.log.gradient_estimates = std::move(trace.gradient_estimates);
  result.log.scores = std::move(trace.scores);
  result.log.discarded_users = trace.discarded_users;
  result.log.passed =
      answers.size() == result.log.scores.size() &&
      std::all_of(answers.begin(), answers.end(),
                  [](Answer a) { return a == Answer::kTop; });
  result.log.answers = std::move(answers);
  result.output = result.log.passed ? trace.average : x0;
  return result;
}

Point localize(const Dataset& data, const LossModel& model,
               const DpSgdConfig& cfg, const Point& x0, Rng& rng) {
  const int n = data.n();
  const int b = cfg.batch_users_B;
  if (n < 2 * b) {
    throw std::invalid_argument(
        "localize: need at least 2*B users, got n=" + std::to_string(n) +
        ", B=" + std::to_string(b));
  }
  const int phases = std::max(
      1, static_cast<int>(std::floor(std::log2(static_cast<double>(n) / b))));
  const double schedule_base =
      std::max(std::log(static_cast<double>(data.m)), 2.0);
  const double log_nmd = std::log(static_cast<double>(n) * data.m * data.d);

  Point x = x0;
  int used = 0;
  for (int s = 1; s <= phases; ++s) {
    const int n_s = std::max(b, n >> s);
    Dataset phase_data;
    phase_data.d = data.d;
    phase_data.m = data.m;
    phase_data.users.assign(data.users.begin() + used,
                            data.users.begin() + used + n_s);
    used += n_s;

    DpSgdConfig phase_cfg = cfg;
    phase_cfg.eta = cfg.eta / std::pow(schedule_base, s);
    PhaseResult phase = dpsgd_phase(phase_data, model, phase_cfg, x, rng);

    const double sigma_s =
        cfg.noise_constant * phase_cfg.eta * model.lipschitz_G *
        std::sqrt(data.d *
                  (cfg.budget.epsilon - std::log(cfg.budget.delta)) *
                  log_nmd) /
        (std::sqrt(static_cast<double>(data.m)) * cfg.budget.epsilon);
    Point noisy = phase.output;
    if (!cfg.insecure_debug_no_noise && sigma_s > 0.0) {
      std::normal_distribution<double> gauss(0.0, sigma_s);
      for (double& v : noisy) v += gauss(rng);
    }
    x = project_linf(noisy, model.center, model.radius_D);
  }
  return x;
}

DpSgdConfig default_params(int n, int m, int d, const PrivacyBudget& budget,
                           double G, double D, double beta,
                           std::vector<std::string>* warnings) {
  if (n < 1 || m < 1 || d < 1 || G <= 0.0 || D <= 0.0 || beta < 0.0) {
    throw std::invalid_argument("default_params: arguments must be positive");
  }
  if (budget.epsilon <= 0.0 || budget.delta <= 0.0 || budget.delta >= 1.0) {
    throw std::invalid_argument("default_params: bad privacy budget");
  }
  const double eps = budget.epsilon;
  const double delta = budget.delta;
  if (eps > 2.0 && warnings != nullptr) {
    warnings->push_back(
        "epsilon > 2: the analysis assumes epsilon = O(1); proceeding");
  }

  const double mnd = static_cast<double>(m) * n * d;
  DpSgdConfig cfg;
  cfg.budget = budget;
  cfg.batch_users_B =
      static_cast<int>(std::ceil(100.0 * std::log(mnd / delta) / eps));
  if (n < cfg.batch_users_B) {
    throw InfeasibleConfig("default_params: n=" + std::to_string(n) +
                           " below one batch B=" +
                           std::to_string(cfg.batch_users_B));
  }
  const double steps =
      std::max(1.0, std::floor(static_cast<double>(n) / cfg.batch_users_B));
  cfg.tau = G * std::log(mnd) / std::sqrt(static_cast<double>(m));
  cfg.varsigma = 1.0 / cfg.tau;
  cfg.upsilon = 0.9 * cfg.batch_users_B + 2.0 * std::log(steps / delta) / eps;

  const double eta_stat = cfg.batch_users_B *
                          std::sqrt(static_cast<double>(m)) /
                          std::sqrt(static_cast<double>(n));
  const double eta_priv =
      std::sqrt(static_cast<double>(m)) * eps /
      std::sqrt(d * std::log(1.0 / delta) * std::log(mnd));
  cfg.eta = (D / G) * std::min(eta_stat, eta_priv);
  if (beta > 0.0) cfg.eta = std::min(cfg.eta, 2.0 / beta);

  if (beta > 0.0) {
    const double beta_max =
        (G / D) * (std::sqrt(static_cast<double>(n)) * eps /
                       (std::sqrt(static_cast<double>(m)) *
                        std::log(mnd / delta)) +
                   std::sqrt(d * std::log(1.0 / delta) * std::log(mnd)) /
                       (std::sqrt(static_cast<double>(m)) * eps));
    if (beta > beta_max && warnings != nullptr) {
      warnings->push_back("beta exceeds the admissible smoothness range");
    }
  }
  return cfg;
}

std::vector<std::string> describe_params(const DpSgdConfig& cfg, int n, int m,
                                         int d) {
  auto fmt = [](const char* name, double value, const char* formula) {
    std::ostringstream os;
    os << name << " = " << value << "   [" << formula << "]";
    return os.str();
  };
  std::vector<std::string> lines;
  lines.push_back("instance: n=" + std::to_string(n) + " m=" +
                  std::to_string(m) + " d=" + std::to_string(d));
  lines.push_back(fmt("epsilon", cfg.budget.epsilon, "input"));
  lines.push_back(fmt("delta", cfg.budget.delta, "input"));
  lines.push_back(fmt("B", cfg.batch_users_B, "ceil(100 ln(mnd/delta)/eps)"));
  lines.push_back(fmt("tau", cfg.tau, "G ln(nmd)/sqrt(m)"));
  lines.push_back(fmt("varsigma", cfg.varsigma, "1/tau"));
  lines.push_back(fmt("upsilon", cfg.upsilon, "0.9B + 2 ln(T/delta)/eps"));
  lines.push_back(fmt("eta", cfg.eta,
                      "(D/G) min{B sqrt(m)/sqrt(n), sqrt(m) eps/"
                      "sqrt(d ln(1/delta) ln(nmd))}, capped at 2/beta"));
  lines.push_back(fmt("noise_constant", cfg.noise_constant,
                      "multiplier inside sigma_s"));
  return lines;
}

Point naive_dpsgd_baseline(const Dataset& data, const LossModel& model,
                           const PrivacyBudget& budget, double eta, int steps,
                           Rng& rng, bool insecure_debug_no_noise) {
  if (budget.epsilon <= 0.0 || budget.delta <= 0.0) {
    throw std::invalid_argument(
        "naive_dpsgd_baseline: zero budget share is unsupported");
  }
  if (steps < 1 || data.n() < steps) {
    throw std::invalid_argument("naive_dpsgd_baseline: bad step count");
  }
  if (model.smooth_beta > 0.0 && eta > 2.0 / model.smooth_beta) {
    throw std::invalid_argument(
        "naive_dpsgd_baseline: eta exceeds 2/beta");
  }
  const int b = data.n() / steps;
  // Per-step budget from advanced composition across `steps` releases.
  const double eps_step =
      budget.epsilon /
      (2.0 * std::sqrt(2.0 * steps * std::log(2.0 / budget.delta)));
  const double delta_step = budget.delta / (2.0 * steps);
  const double l2_sens = 2.0 * model.lipschitz_G * std::sqrt(data.d) / b;
  const double sigma =
      insecure_debug_no_noise
          ? 0.0
          : gaussian_mechanism_sigma(l2_sens, {eps_step, delta_step});

  std::normal_distribution<double> gauss(0.0, sigma > 0.0 ? sigma : 1.0);
  Point x = model.center;
  std::vector<Point> iterates;
  iterates.reserve(steps);
  for (int t = 0; t < steps; ++t) {
    Vec g(data.d, 0.0);
    for (int i = 0; i < b; ++i) {
      const Vec q = user_avg_gradient(model, data.users[t * b + i], x);
      for (int j = 0; j < data.d; ++j) g[j] += q[j];
    }
    for (int j = 0; j < data.d; ++j) {
      g[j] /= b;
      if (sigma > 0.0) g[j] += gauss(rng);
    }
    Point next(data.d);
    for (int j = 0; j < data.d; ++j) next[j] = x[j] - eta * g[j];
    x = project_linf(next, model.center, model.radius_D);
    iterates.push_back(x);
  }
  return average_points(iterates);
}

void write_trajectory_csv(std::ostream& out, int phase,
                          const TrajectoryLog& log,
                          const std::vector<double>& linf_gaps,
                          const std::vector<double>& excess_risks) {
  out << "phase,step,score,answer,linf_gap,excess_risk\n";
  char buf[40];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  for (std::size_t t = 0; t < log.scores.size(); ++t) {
    const char* answer =
        t < log.answers.size()
            ? (log.answers[t] == Answer::kTop ? "top" : "bottom")
            : "-";
    out << phase << ',' << (t + 1) << ',' << num(log.scores[t]) << ','
        << answer << ','
        << (t < linf_gaps.size() ? num(linf_gaps[t]) : "-") << ','
        << (t < excess_risks.size() ? num(excess_risks[t]) : "-") << "\n";
  }
}

}  // namespace dpsco
