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

#include "dpsco/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

namespace dpsco {

namespace {

double linf_dist(const Vec& a, const Vec& b) {
  double best = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    best = std::max(best, std::abs(a[k] - b[k]));
  }
  return best;
}

std::vector<Vec> step1_gradients(const Dataset& data, const LossModel& model,
                                 int b, const Point& x0) {
  std::vector<Vec> grads;
  grads.reserve(b);
  for (int i = 0; i < b; ++i) {
    grads.push_back(user_avg_gradient(model, data.users[i], x0));
  }
  return grads;
}

int count_in_ball(const std::vector<Vec>& grads, const Vec& center,
                  double rho) {
  int count = 0;
  for (const Vec& g : grads) {
    if (linf_dist(g, center) <= rho) ++count;
  }
  return count;
}

// Rebuilds one step-1 user so its average gradient at x0 sits at a chosen
// offset along the steepest Hessian column (or e_0 for the linear kind).
// All m samples are set equal, so the user average is exact.
UserRecord scattered_user(const LossModel& model, const Point& x0,
                          double offset, int axis, int m) {
  const int d = static_cast<int>(x0.size());
  Vec z(d, 0.0);
  if (model.kind == LossKind::kQuadraticDiagDominant) {
    // gradient = A (x0 - z); z = x0 - offset e_axis gives offset * A e_axis.
    z = x0;
    z[axis] -= offset;
  } else {
    // gradient = -z; z = -offset e_axis gives offset * e_axis.
    z[axis] = -offset;
  }
  UserRecord user;
  user.samples.assign(m, z);
  return user;
}

}  // namespace

NeighborPair neighboring_pair(const Dataset& data, const LossModel& model,
                              const DpSgdConfig& cfg, const Point& x0,
                              const NeighborSpec& spec, Rng& rng) {
  const int b = cfg.batch_users_B;
  if (data.n() < b) {
    throw ConstructionFailure("neighboring_pair: fewer users than one batch");
  }
  if (spec.swap_user_index < 0 || spec.swap_user_index >= b) {
    throw ConstructionFailure(
        "neighboring_pair: swap index must land in step 1 (index < B)");
  }
  const double rho = spec.rho > 0.0 ? spec.rho : 1.0 / cfg.tau;

  NeighborPair pair;
  pair.base = data;
  pair.swapped = data;

  if (spec.alignment == Alignment::kAdversarialScatter) {
    int axis = 0;
    double column_peak = 1.0;
    if (model.kind == LossKind::kQuadraticDiagDominant) {
      for (int k = 1; k < data.d; ++k) {
        if (model.hessian[k][k] > model.hessian[axis][axis]) axis = k;
      }
      column_peak = model.hessian[axis][axis];
    }
    const double spacing = 2.5 / (cfg.tau * column_peak);
    for (int i = 0; i < b; ++i) {
      UserRecord u = scattered_user(model, x0, (i + 1) * spacing, axis,
                                    data.m);
      pair.base.users[i] = u;
      pair.swapped.users[i] = std::move(u);
    }
    pair.swapped.users[spec.swap_user_index] =
        scattered_user(model, x0, (b + 1) * spacing, axis, data.m);

    // Certificate: pairwise gaps > 2/tau mean any (1/tau)-ball holds at most
    // one gradient. A ball of radius 1/tau with two members would put both
    // inside the (2/tau)-ball centered at either member, so it is enough to
    // check those centered balls are singletons.
    for (const Dataset* ds : {&pair.base, &pair.swapped}) {
      const std::vector<Vec> grads = step1_gradients(*ds, model, b, x0);
      for (int i = 0; i < b; ++i) {
        if (count_in_ball(grads, grads[i], 2.0 / cfg.tau) != 1) {
          throw ConstructionFailure(
              "neighboring_pair: scatter certificate failed at gradient " +
              std::to_string(i));
        }
      }
    }
    return pair;
  }

  if (spec.replacement.has_value()) {
    pair.swapped.users[spec.swap_user_index] = *spec.replacement;
  } else {
    // Draw the replacement from the dataset's own empirical distribution.
    std::uniform_int_distribution<int> pick(0, data.n() - 1);
    int source = spec.swap_user_index;
    while (source == spec.swap_user_index) source = pick(rng);
    pair.swapped.users[spec.swap_user_index] = data.users[source];
  }

  if (spec.alignment == Alignment::kAligned) {
    const int needed = (2 * b + 2) / 3;  // ceil(2B/3)
    const std::vector<Vec> base_grads =
        step1_gradients(pair.base, model, b, x0);
    const std::vector<Vec> swapped_grads =
        step1_gradients(pair.swapped, model, b, x0);
    const Vec center = coord_robust_stat(
        base_grads, RobustStatKind{RobustStatVariant::kCoordinateMedian, 0.0});
    const int base_in = count_in_ball(base_grads, center, rho);
    const int swapped_in = count_in_ball(swapped_grads, center, rho);
    if (base_in < needed || swapped_in < needed) {
      throw ConstructionFailure(
          "neighboring_pair: alignment certificate failed, counts " +
          std::to_string(base_in) + "/" + std::to_string(swapped_in) +
          " of required " + std::to_string(needed));
    }
  }
  return pair;
}

SensitivityReport measure_iteration_sensitivity(const LossModel& model,
                                                const NeighborPair& pair,
                                                const DpSgdConfig& cfg,
                                                const Point& x0, double rho) {
  const SgdTrace a = run_robust_sgd_loop(pair.base, model, cfg, x0);
  const SgdTrace b = run_robust_sgd_loop(pair.swapped, model, cfg, x0);

  SensitivityReport report;
  report.base_gap_bound = cfg.eta * (4.0 * rho + 2.0 * cfg.varsigma);
  const std::size_t steps = std::min(a.iterates.size(), b.iterates.size());
  const double slack = 1e-9;
  const double score_bound =
      (2.0 * cfg.batch_users_B - 1.0) / cfg.batch_users_B;
  for (std::size_t t = 0; t < steps; ++t) {
    const double gap = linf_dist(a.iterates[t], b.iterates[t]);
    report.per_step_linf_gap.push_back(gap);
    const double score_gap = std::abs(a.scores[t] - b.scores[t]);
    report.score_gaps.push_back(score_gap);
    if (score_gap > score_bound + slack) report.violated = true;
    if (t == 0) {
      if (gap > report.base_gap_bound + slack) report.violated = true;
    } else if (gap > report.per_step_linf_gap.front() + slack) {
      report.violated = true;
    }
  }
  return report;
}

std::string pipeline_name(Pipeline p) {
  switch (p) {
    case Pipeline::kRobust:
      return "robust";
    case Pipeline::kNaiveBaseline:
      return "naive-baseline";
    case Pipeline::kNonPrivate:
      return "non-private";
  }
  return "unknown";
}

std::vector<UtilityRow> run_utility_experiment(
    const std::vector<UtilityGridPoint>& grid, int d,
    const std::vector<std::uint64_t>& seeds, Pipeline pipeline,
    const SweepProfile& profile) {
  std::vector<UtilityRow> rows;
  for (const UtilityGridPoint& gp : grid) {
    for (std::uint64_t seed : seeds) {
      UtilityRow row;
      row.n = gp.n;
      row.m = gp.m;
      row.pipeline = pipeline;
      row.seed = seed;
      try {
        const QuadraticInstance inst = make_quadratic_instance(
            d, gp.n, gp.m, seed, profile.beta, profile.sample_std);
        const PrivacyBudget budget{profile.epsilon, profile.delta};
        const double g = inst.model.lipschitz_G;
        const double dd = inst.model.radius_D;
        const double mnd =
            static_cast<double>(gp.m) * gp.n * d;

        DpSgdConfig cfg;
        cfg.budget = budget;
        cfg.batch_users_B =
            std::clamp(profile.batch_min, 1, std::max(1, gp.n / 2));
        cfg.tau = g * std::log(mnd) / std::sqrt(static_cast<double>(gp.m));
        cfg.varsigma = 1.0 / cfg.tau;
        const double steps =
            std::max(1.0, std::floor(static_cast<double>(gp.n) /
                                     cfg.batch_users_B));
        cfg.upsilon = 0.9 * cfg.batch_users_B +
                      2.0 * std::log(steps / budget.delta) / budget.epsilon;
        const double eta_stat = cfg.batch_users_B *
                                std::sqrt(static_cast<double>(gp.m)) /
                                std::sqrt(static_cast<double>(gp.n));
        const double eta_priv =
            std::sqrt(static_cast<double>(gp.m)) * budget.epsilon /
            std::sqrt(d * std::log(1.0 / budget.delta) * std::log(mnd));
        cfg.eta = std::min({(dd / g) * std::min(eta_stat, eta_priv),
                            2.0 / profile.beta, profile.eta_cap});
        cfg.noise_constant = profile.noise_constant;

        Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
        Point result;
        switch (pipeline) {
          case Pipeline::kRobust:
            result = localize(inst.data, inst.model, cfg, inst.model.center,
                              rng);
            break;
          case Pipeline::kNaiveBaseline:
            result = naive_dpsgd_baseline(inst.data, inst.model, budget,
                                          cfg.eta, profile.baseline_steps,
                                          rng);
            break;
          case Pipeline::kNonPrivate: {
            const SgdTrace trace =
                run_robust_sgd_loop(inst.data, inst.model, cfg,
                                    inst.model.center);
            result = trace.average;
            break;
          }
        }
        row.excess_risk = excess_risk(inst.model, result);
        row.feasible = true;
      } catch (const std::exception&) {
        row.feasible = false;
        row.excess_risk = std::numeric_limits<double>::quiet_NaN();
      }
      rows.push_back(row);
    }
  }
  return rows;
}

void write_utility_csv(std::ostream& out,
                       const std::vector<UtilityRow>& rows) {
  out << "nm,n,m,pipeline,seed,excess_risk,feasible,passed\n";
  char buf[40];
  for (const UtilityRow& row : rows) {
    std::snprintf(buf, sizeof(buf), "%.17g", row.excess_risk);
    out << static_cast<long long>(row.n) * row.m << ',' << row.n << ','
        << row.m << ',' << pipeline_name(row.pipeline) << ',' << row.seed
        << ',' << buf << ',' << (row.feasible ? 1 : 0) << ','
        << (row.passed ? 1 : 0) << "\n";
  }
}

double spearman(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw std::invalid_argument("spearman: need two equal-length series");
  }
  auto ranks = [](const std::vector<double>& v) {
    const std::size_t n = v.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> r(n);
    std::size_t i = 0;
    while (i < n) {
      std::size_t j = i;
      while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
      const double avg = 0.5 * (i + j) + 1.0;  // ties share the mean rank
      for (std::size_t k = i; k <= j; ++k) r[order[k]] = avg;
      i = j + 1;
    }
    return r;
  };
  const std::vector<double> rx = ranks(xs);
  const std::vector<double> ry = ranks(ys);
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    mx += rx[i];
    my += ry[i];
  }
  mx /= n;
  my /= n;
  double num = 0.0, vx = 0.0, vy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    num += (rx[i] - mx) * (ry[i] - my);
    vx += (rx[i] - mx) * (rx[i] - mx);
    vy += (ry[i] - my) * (ry[i] - my);
  }
  if (vx == 0.0 || vy == 0.0) return 0.0;
  return num / std::sqrt(vx * vy);
}

CounterexampleResult counterexample_geometric_median(double alpha) {
  if (alpha <= 0.0) {
    throw std::invalid_argument(
        "counterexample_geometric_median: alpha must be > 0");
  }
  const std::vector<Point2> p{{0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0},
                              {1.0, alpha}};
  const std::vector<Point2> p_prime{{0.0, 0.0}, {0.0, alpha}, {1.0, 0.0},
                                    {1.0, 0.0}};
  CounterexampleResult result;
  result.median_p = geometric_median_weiszfeld(p, 1e-12, 10000).point;
  result.median_p_prime =
      geometric_median_weiszfeld(p_prime, 1e-12, 10000).point;
  result.l2_shift = std::hypot(result.median_p[0] - result.median_p_prime[0],
                               result.median_p[1] - result.median_p_prime[1]);

  auto coord_median = [](const std::vector<Point2>& pts) {
    std::vector<double> xs, ys;
    for (const Point2& q : pts) {
      xs.push_back(q[0]);
      ys.push_back(q[1]);
    }
    return Point2{median_1d(xs), median_1d(ys)};
  };
  const Point2 cm_p = coord_median(p);
  const Point2 cm_pp = coord_median(p_prime);
  result.coord_median_shift = std::max(std::abs(cm_p[0] - cm_pp[0]),
                                       std::abs(cm_p[1] - cm_pp[1]));
  return result;
}

}  // namespace dpsco
