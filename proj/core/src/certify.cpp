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

#include "dpsco/certify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <sstream>

#include "dpsco/estimator.hpp"
#include "dpsco/harness.hpp"
#include "dpsco/optimizer.hpp"
#include "dpsco/privacy.hpp"
#include "dpsco/problem.hpp"

namespace dpsco {

namespace {

std::string kind_tag(const RobustStatKind& kind) {
  return kind.variant == RobustStatVariant::kCoordinateMedian
             ? "median"
             : "trimmed-mean";
}

double apply_stat(const std::vector<double>& values,
                  const RobustStatKind& kind) {
  return kind.variant == RobustStatVariant::kCoordinateMedian
             ? median_1d(values)
             : trimmed_mean_1d(values, kind.trim_fraction);
}

double linf_dist(const Vec& a, const Vec& b) {
  double best = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    best = std::max(best, std::abs(a[k] - b[k]));
  }
  return best;
}

void finish(CheckResult* r) { r->passed = r->violations == 0; }

}  // namespace

CheckResult check_axiom_containment(const RobustStatKind& kind, long trials,
                                    std::uint64_t seed) {
  CheckResult r;
  r.name = "axiom-containment/" + kind_tag(kind);
  r.trials = trials;
  Rng rng(seed);
  std::uniform_int_distribution<int> b_dist(4, 21);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> pos(0.01, 10.0);
  std::uniform_real_distribution<double> wild(-1e6, 1e6);
  for (long t = 0; t < trials; ++t) {
    const int b = b_dist(rng);
    // Tolerated outliers: any minority for the median, the trim budget for
    // the trimmed mean.
    const int max_out =
        kind.variant == RobustStatVariant::kCoordinateMedian
            ? (b + 1) / 2 - 1
            : static_cast<int>(std::floor(kind.trim_fraction * b + 1e-12));
    std::uniform_int_distribution<int> o_dist(0, std::max(0, max_out));
    const int outliers = o_dist(rng);
    const double center = 100.0 * unit(rng);
    const double radius = pos(rng);
    std::vector<double> values;
    for (int i = 0; i < b - outliers; ++i) {
      values.push_back(center + radius * unit(rng));
    }
    for (int i = 0; i < outliers; ++i) values.push_back(wild(rng));
    std::shuffle(values.begin(), values.end(), rng);
    const double stat = apply_stat(values, kind);
    const double slack = std::abs(stat - center) - radius;
    r.worst = std::max(r.worst, slack);
    if (slack > 1e-9) ++r.violations;
  }
  finish(&r);
  return r;
}

CheckResult check_axiom_lipschitz(const RobustStatKind& kind, long trials,
                                  std::uint64_t seed) {
  CheckResult r;
  r.name = "axiom-lipschitz/" + kind_tag(kind);
  r.trials = trials;
  Rng rng(seed);
  std::uniform_int_distribution<int> b_dist(1, 21);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> scale(0.0, 5.0);
  for (long t = 0; t < trials; ++t) {
    const int b = b_dist(rng);
    const double delta = scale(rng);
    std::vector<double> values(b), shifted(b);
    double max_shift = 0.0;
    for (int i = 0; i < b; ++i) {
      values[i] = 50.0 * unit(rng);
      const double u = delta * unit(rng);
      shifted[i] = values[i] + u;
      max_shift = std::max(max_shift, std::abs(u));
    }
    const double gap =
        std::abs(apply_stat(shifted, kind) - apply_stat(values, kind));
    const double slack = gap - max_shift;
    r.worst = std::max(r.worst, slack);
    if (slack > 1e-12) ++r.violations;
  }
  finish(&r);
  return r;
}

CheckResult check_axiom_affine(const RobustStatKind& kind, long trials,
                               std::uint64_t seed) {
  CheckResult r;
  r.name = "axiom-affine/" + kind_tag(kind);
  r.trials = trials;
  Rng rng(seed);
  std::uniform_int_distribution<int> b_dist(1, 21);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> a_pos(0.01, 20.0);
  const bool allow_negative_a =
      kind.variant == RobustStatVariant::kCoordinateTrimmedMean;
  for (long t = 0; t < trials; ++t) {
    const int b = b_dist(rng);
    double a = a_pos(rng);
    if (allow_negative_a && (t & 1)) a = -a;
    const double shift = 100.0 * unit(rng);
    std::vector<double> values(b), mapped(b);
    for (int i = 0; i < b; ++i) {
      values[i] = 50.0 * unit(rng);
      mapped[i] = a * values[i] + shift;
    }
    const double lhs = apply_stat(mapped, kind);
    const double rhs = a * apply_stat(values, kind) + shift;
    const double err = std::abs(lhs - rhs) / (1.0 + std::abs(rhs));
    r.worst = std::max(r.worst, err);
    if (err > 1e-9) ++r.violations;
  }
  finish(&r);
  return r;
}

CheckResult check_projection_stability(long trials, std::uint64_t seed) {
  CheckResult r;
  r.name = "projection-stability";
  r.trials = trials;
  Rng rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> wide(-100.0, 100.0);
  std::uniform_real_distribution<double> rad(0.0, 10.0);
  for (long t = 0; t < trials; ++t) {
    const double a = wide(rng);
    const double b = a + unit(rng);
    const double c = wide(rng);
    const double d = c + unit(rng);
    const double radius = rad(rng);
    const double gap = std::abs(project_to_interval(c, a, radius) -
                                project_to_interval(d, b, radius));
    const double slack = gap - 1.0;
    r.worst = std::max(r.worst, slack);
    if (slack > 1e-12) ++r.violations;
  }
  finish(&r);
  return r;
}

CheckResult check_estimator_lipschitz(const RobustStatKind& kind, long trials,
                                      std::uint64_t seed) {
  CheckResult r;
  r.name = "estimator-lipschitz/" + kind_tag(kind);
  r.trials = trials;
  Rng rng(seed);
  std::uniform_int_distribution<int> b_dist(1, 21);
  std::uniform_int_distribution<int> d_dist(1, 8);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> scale(0.0, 3.0);
  std::uniform_real_distribution<double> thr(0.01, 5.0);
  for (long t = 0; t < trials; ++t) {
    const int b = b_dist(rng);
    const int d = d_dist(rng);
    const double delta = scale(rng);
    EstimatorConfig cfg{thr(rng), kind};
    std::vector<Vec> base(b, Vec(d)), moved(b, Vec(d));
    double max_shift = 0.0;
    for (int i = 0; i < b; ++i) {
      for (int j = 0; j < d; ++j) {
        base[i][j] = 20.0 * unit(rng);
        const double u = delta * unit(rng);
        moved[i][j] = base[i][j] + u;
        max_shift = std::max(max_shift, std::abs(u));
      }
    }
    const double gap = linf_dist(robust_gradient_estimate(moved, cfg),
                                 robust_gradient_estimate(base, cfg));
    const double slack = gap - max_shift;
    r.worst = std::max(r.worst, slack);
    if (slack > 1e-12) ++r.violations;
  }
  finish(&r);
  return r;
}

CheckResult check_estimator_unbiased(const RobustStatKind& kind, long trials,
                                     std::uint64_t seed) {
  CheckResult r;
  r.name = "estimator-unbiased/" + kind_tag(kind);
  r.trials = trials;
  Rng rng(seed);
  std::uniform_int_distribution<int> b_dist(1, 21);
  std::uniform_int_distribution<int> d_dist(1, 8);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (long t = 0; t < trials; ++t) {
    const int b = b_dist(rng);
    const int d = d_dist(rng);
    const double varsigma = 1.0;
    EstimatorConfig cfg{varsigma, kind};
    // Spread well inside varsigma so the pass-through branch must fire.
    std::vector<Vec> grads(b, Vec(d));
    for (int j = 0; j < d; ++j) {
      const double center = 10.0 * unit(rng);
      for (int i = 0; i < b; ++i) {
        grads[i][j] = center + 0.05 * unit(rng);
      }
    }
    const Vec est = robust_gradient_estimate(grads, cfg);
    // Reference mean accumulated in the same input order.
    Vec mean(d, 0.0);
    for (const Vec& v : grads) {
      for (int j = 0; j < d; ++j) mean[j] += v[j];
    }
    for (int j = 0; j < d; ++j) mean[j] /= b;
    for (int j = 0; j < d; ++j) {
      if (est[j] != mean[j]) {
        ++r.violations;
        r.worst = std::max(r.worst, std::abs(est[j] - mean[j]));
        break;
      }
    }
  }
  finish(&r);
  return r;
}

CheckResult check_contractivity(long trials, std::uint64_t seed) {
  CheckResult r;
  r.name = "contractivity";
  r.trials = trials;
  Rng rng(seed);
  std::uniform_int_distribution<int> d_dist(1, 8);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> diag(0.5, 2.0);
  std::uniform_real_distribution<double> frac(0.0, 1.0);
  for (long t = 0; t < trials; ++t) {
    const int d = d_dist(rng);
    // Random symmetric matrix with each diagonal dominating its row.
    Matrix a(d, Vec(d, 0.0));
    for (int i = 0; i < d; ++i) {
      for (int j = i + 1; j < d; ++j) a[i][j] = a[j][i] = unit(rng);
    }
    for (int i = 0; i < d; ++i) {
      double off = 0.0;
      for (int j = 0; j < d; ++j) {
        if (j != i) off += std::abs(a[i][j]);
      }
      a[i][i] = off + diag(rng);
    }
    double beta = 0.0;
    for (int i = 0; i < d; ++i) {
      double row = 0.0;
      for (int j = 0; j < d; ++j) row += std::abs(a[i][j]);
      beta = std::max(beta, row);
    }
    const double eta = frac(rng) * 2.0 / beta;
    Vec u(d), v(d);
    double norm_u = 0.0;
    for (int i = 0; i < d; ++i) {
      u[i] = 10.0 * unit(rng);
      norm_u = std::max(norm_u, std::abs(u[i]));
    }
    double norm_v = 0.0;
    for (int i = 0; i < d; ++i) {
      double acc = u[i];
      for (int j = 0; j < d; ++j) acc -= eta * a[i][j] * u[j];
      v[i] = acc;
      norm_v = std::max(norm_v, std::abs(acc));
    }
    const double slack = norm_v - norm_u;
    r.worst = std::max(r.worst, slack);
    if (slack > 1e-9) ++r.violations;
  }
  finish(&r);
  return r;
}

CheckResult check_iteration_sensitivity(long runs, std::uint64_t seed) {
  CheckResult r;
  r.name = "iteration-sensitivity";
  r.trials = runs;
  const int d = 4, n = 120, m = 16, batch = 30;
  for (long run = 0; run < runs; ++run) {
    const std::uint64_t run_seed = seed + static_cast<std::uint64_t>(run);
    Rng rng(run_seed);
    const QuadraticInstance inst = make_quadratic_instance(
        d, n, m, run_seed, /*beta_target=*/1.0, /*sample_std=*/0.02);
    DpSgdConfig cfg;
    cfg.budget = {1.0, 0.05};
    cfg.batch_users_B = batch;
    cfg.tau = inst.model.lipschitz_G *
              std::log(static_cast<double>(n) * m * d) /
              std::sqrt(static_cast<double>(m));
    cfg.varsigma = 1.0 / cfg.tau;
    cfg.eta = 0.005;
    cfg.kind.variant = (run & 1) ? RobustStatVariant::kCoordinateTrimmedMean
                                 : RobustStatVariant::kCoordinateMedian;
    const double rho = 1.0 / cfg.tau;

    NeighborSpec spec;
    std::uniform_int_distribution<int> pick(0, batch - 1);
    spec.swap_user_index = pick(rng);
    spec.alignment = Alignment::kAligned;
    spec.rho = rho;
    try {
      const NeighborPair pair = neighboring_pair(
          inst.data, inst.model, cfg, inst.model.center, spec, rng);
      const SensitivityReport report = measure_iteration_sensitivity(
          inst.model, pair, cfg, inst.model.center, rho);
      if (report.violated) ++r.violations;
      for (std::size_t t = 0; t < report.per_step_linf_gap.size(); ++t) {
        const double bound = t == 0 ? report.base_gap_bound
                                    : report.per_step_linf_gap.front();
        r.worst =
            std::max(r.worst, report.per_step_linf_gap[t] - bound);
      }
    } catch (const ConstructionFailure& e) {
      ++r.violations;
      r.detail = e.what();
    }
  }
  finish(&r);
  return r;
}

CheckResult check_score_sensitivity(long runs, std::uint64_t seed) {
  CheckResult r;
  r.name = "score-sensitivity";
  r.trials = runs;
  const int d = 3, n = 40, m = 8, batch = 10;
  for (long run = 0; run < runs; ++run) {
    const std::uint64_t run_seed = seed + static_cast<std::uint64_t>(run);
    Rng rng(run_seed);
    const QuadraticInstance inst = make_quadratic_instance(
        d, n, m, run_seed, /*beta_target=*/1.0, /*sample_std=*/0.5);
    DpSgdConfig cfg;
    cfg.budget = {1.0, 0.05};
    cfg.batch_users_B = batch;
    cfg.tau = inst.model.lipschitz_G *
              std::log(static_cast<double>(n) * m * d) /
              std::sqrt(static_cast<double>(m));
    cfg.varsigma = 1.0 / cfg.tau;
    cfg.eta = 0.01;
    cfg.kind.variant = (run & 1) ? RobustStatVariant::kCoordinateTrimmedMean
                                 : RobustStatVariant::kCoordinateMedian;

    // Wild replacement: an arbitrarily far user exercises the swap bound at
    // its worst.
    std::uniform_real_distribution<double> wild(-1e3, 1e3);
    UserRecord replacement;
    replacement.samples.assign(m, Vec(d));
    for (Vec& z : replacement.samples) {
      for (double& v : z) v = wild(rng);
    }
    NeighborSpec spec;
    std::uniform_int_distribution<int> pick(0, batch - 1);
    spec.swap_user_index = pick(rng);
    spec.replacement = replacement;
    spec.alignment = Alignment::kUnconstrained;
    const NeighborPair pair = neighboring_pair(
        inst.data, inst.model, cfg, inst.model.center, spec, rng);

    const SgdTrace a =
        run_robust_sgd_loop(pair.base, inst.model, cfg, inst.model.center);
    const SgdTrace b =
        run_robust_sgd_loop(pair.swapped, inst.model, cfg, inst.model.center);
    const double bound = (2.0 * batch - 1.0) / batch;
    for (std::size_t t = 0; t < a.scores.size(); ++t) {
      const double gap = std::abs(a.scores[t] - b.scores[t]);
      const double slack = gap - bound;
      r.worst = std::max(r.worst, slack);
      if (slack > 1e-12 || gap > 2.0) ++r.violations;
    }
  }
  finish(&r);
  return r;
}

namespace {

// Shared profile for the concentration pass/halt checks. n is the fixed
// point of n = 2 * ceil(100 ln(nmd/delta)/eps) at eps=2, delta=0.05, m=256,
// d=2, so the default batch size gives exactly two steps.
struct ConcentrationProfile {
  int d = 2;
  int n = 1672;
  int m = 256;
  PrivacyBudget budget{2.0, 0.05};
};

}  // namespace

CheckResult check_concentration_pass(long seeds, std::uint64_t seed) {
  CheckResult r;
  r.name = "concentration-pass";
  r.trials = seeds;
  const ConcentrationProfile p;
  long passed = 0;
  for (long s = 0; s < seeds; ++s) {
    const std::uint64_t run_seed = seed + static_cast<std::uint64_t>(s);
    const QuadraticInstance inst = make_quadratic_instance(
        p.d, p.n, p.m, run_seed, /*beta_target=*/1.0, /*sample_std=*/0.05);
    const DpSgdConfig cfg = default_params(
        p.n, p.m, p.d, p.budget, inst.model.lipschitz_G, inst.model.radius_D,
        inst.model.smooth_beta);
    Rng rng(run_seed ^ 0xabcdef12ULL);
    const PhaseResult phase =
        dpsgd_phase(inst.data, inst.model, cfg, inst.model.center, rng);
    if (phase.log.passed) ++passed;
  }
  r.violations = seeds - passed;
  r.worst = static_cast<double>(passed) / seeds;
  r.passed = r.worst >= 0.95;
  std::ostringstream os;
  os << "pass rate " << r.worst << " (need >= 0.95)";
  r.detail = os.str();
  return r;
}

CheckResult check_concentration_halt(long seeds, std::uint64_t seed) {
  CheckResult r;
  r.name = "concentration-halt";
  r.trials = seeds;
  const ConcentrationProfile p;
  long halted = 0;
  for (long s = 0; s < seeds; ++s) {
    const std::uint64_t run_seed = seed + static_cast<std::uint64_t>(s);
    const QuadraticInstance inst = make_quadratic_instance(
        p.d, p.n, p.m, run_seed, /*beta_target=*/1.0, /*sample_std=*/0.05);
    const DpSgdConfig cfg = default_params(
        p.n, p.m, p.d, p.budget, inst.model.lipschitz_G, inst.model.radius_D,
        inst.model.smooth_beta);
    Rng rng(run_seed ^ 0x12345678ULL);
    NeighborSpec spec;
    spec.swap_user_index = 0;
    spec.alignment = Alignment::kAdversarialScatter;
    const NeighborPair pair = neighboring_pair(
        inst.data, inst.model, cfg, inst.model.center, spec, rng);
    const PhaseResult phase =
        dpsgd_phase(pair.base, inst.model, cfg, inst.model.center, rng);
    const bool halt_at_one = !phase.log.passed && !phase.log.answers.empty() &&
                             phase.log.answers.front() == Answer::kBottom;
    if (halt_at_one) ++halted;
  }
  r.violations = seeds - halted;
  r.worst = static_cast<double>(halted) / seeds;
  r.passed = r.worst >= 0.95;
  std::ostringstream os;
  os << "step-1 halt rate " << r.worst << " (need >= 0.95)";
  r.detail = os.str();
  return r;
}

CheckResult check_gaussian_calibration(std::uint64_t /*seed*/) {
  CheckResult r;
  r.name = "gaussian-calibration";
  r.trials = 3;
  const long double ref =
      std::sqrt(2.0L * std::log(1.25L / 1e-5L));  // delta=1e-5, eps=1, sens=1
  const double got = gaussian_mechanism_sigma(1.0, {1.0, 1e-5});
  if (std::abs(got - static_cast<double>(ref)) > 1e-12 * ref) ++r.violations;
  // Exact scaling in sensitivity and inverse scaling in epsilon.
  const double doubled = gaussian_mechanism_sigma(2.0, {1.0, 1e-5});
  if (std::abs(doubled - 2.0 * got) > 1e-12 * doubled) ++r.violations;
  const double tighter = gaussian_mechanism_sigma(1.0, {2.0, 1e-5});
  if (std::abs(2.0 * tighter - got) > 1e-12 * got) ++r.violations;
  r.worst = std::abs(got - static_cast<double>(ref));
  std::ostringstream os;
  os << "sigma(1,1,1e-5) = " << got;
  r.detail = os.str();
  finish(&r);
  return r;
}

CheckResult check_sampler_moments(std::uint64_t seed) {
  CheckResult r;
  r.name = "sampler-moments";
  const long n = 1000000;
  r.trials = 2 * n;
  Rng rng(seed);
  const double scale = 1.7;
  const double sigma = 1.3;
  std::normal_distribution<double> gauss(0.0, sigma);
  double lap_sum = 0.0, lap_sq = 0.0, gau_sum = 0.0, gau_sq = 0.0;
  for (long i = 0; i < n; ++i) {
    const double x = laplace_sample(scale, rng);
    lap_sum += x;
    lap_sq += x * x;
    const double y = gauss(rng);
    gau_sum += y;
    gau_sq += y * y;
  }
  const double lap_mean = lap_sum / n;
  const double lap_var = lap_sq / n - lap_mean * lap_mean;
  const double gau_mean = gau_sum / n;
  const double gau_var = gau_sq / n - gau_mean * gau_mean;
  // Laplace(scale): variance 2 scale^2, fourth moment 24 scale^4, so the
  // sample variance has std sqrt(20/n) scale^2. Normal(sigma): variance
  // sigma^2 with sample-variance std sqrt(2/n) sigma^2.
  const double z_scores[] = {
      std::abs(lap_mean) / (scale * std::sqrt(2.0 / n)),
      std::abs(lap_var - 2.0 * scale * scale) /
          (scale * scale * std::sqrt(20.0 / n)),
      std::abs(gau_mean) / (sigma / std::sqrt(static_cast<double>(n))),
      std::abs(gau_var - sigma * sigma) /
          (sigma * sigma * std::sqrt(2.0 / n)),
  };
  for (double z : z_scores) {
    r.worst = std::max(r.worst, z);
    if (z > 3.0) ++r.violations;
  }
  std::ostringstream os;
  os << "max z-score " << r.worst << " (need <= 3)";
  r.detail = os.str();
  finish(&r);
  return r;
}

namespace {

double ks_statistic(std::vector<double> draws,
                    const std::function<double(double)>& cdf) {
  std::sort(draws.begin(), draws.end());
  const std::size_t n = draws.size();
  double d_stat = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double f = cdf(draws[i]);
    d_stat = std::max(d_stat, std::abs(f - static_cast<double>(i) / n));
    d_stat = std::max(d_stat, std::abs(static_cast<double>(i + 1) / n - f));
  }
  return d_stat;
}

}  // namespace

CheckResult check_sampler_ks(std::uint64_t seed) {
  CheckResult r;
  r.name = "sampler-ks";
  const long n = 100000;
  r.trials = 2 * n;
  Rng rng(seed);
  const double scale = 0.8;
  const double sigma = 2.4;
  std::vector<double> lap(n), gau(n);
  std::normal_distribution<double> gauss(0.0, sigma);
  for (long i = 0; i < n; ++i) {
    lap[i] = laplace_sample(scale, rng);
    gau[i] = gauss(rng);
  }
  const double d_lap = ks_statistic(std::move(lap), [scale](double x) {
    return x < 0.0 ? 0.5 * std::exp(x / scale)
                   : 1.0 - 0.5 * std::exp(-x / scale);
  });
  const double d_gau = ks_statistic(std::move(gau), [sigma](double x) {
    return 0.5 * std::erfc(-x / (sigma * std::sqrt(2.0)));
  });
  // Critical value at significance 0.01: sqrt(-ln(0.005)/2) / sqrt(n).
  const double crit = std::sqrt(-std::log(0.005) / 2.0) / std::sqrt(n);
  r.worst = std::max(d_lap, d_gau);
  if (d_lap > crit) ++r.violations;
  if (d_gau > crit) ++r.violations;
  std::ostringstream os;
  os << "D = " << r.worst << " vs critical " << crit;
  r.detail = os.str();
  finish(&r);
  return r;
}

CheckResult check_counterexample() {
  CheckResult r;
  r.name = "geometric-median-instability";
  r.trials = 2;
  for (double alpha : {1e-3, 1e-6}) {
    const CounterexampleResult c = counterexample_geometric_median(alpha);
    const bool big_jump = c.l2_shift >= 0.9;
    const bool coord_stable = c.coord_median_shift <= alpha + 1e-15;
    if (!(big_jump && coord_stable)) ++r.violations;
    r.worst = std::max(r.worst, c.l2_shift);
  }
  std::ostringstream os;
  os << "geometric median jumps ~1 while the coordinate median stays put";
  r.detail = os.str();
  finish(&r);
  return r;
}

std::vector<CheckResult> run_certification_suite(std::uint64_t seed) {
  const RobustStatKind median{RobustStatVariant::kCoordinateMedian, 0.0};
  const RobustStatKind trimmed{RobustStatVariant::kCoordinateTrimmedMean,
                               0.25};
  std::vector<CheckResult> out;
  for (const RobustStatKind& kind : {median, trimmed}) {
    out.push_back(check_axiom_containment(kind, 2000, seed + 1));
    out.push_back(check_axiom_lipschitz(kind, 2000, seed + 2));
    out.push_back(check_axiom_affine(kind, 2000, seed + 3));
    out.push_back(check_estimator_lipschitz(kind, 1000, seed + 4));
    out.push_back(check_estimator_unbiased(kind, 1000, seed + 5));
  }
  out.push_back(check_projection_stability(5000, seed + 6));
  out.push_back(check_contractivity(1000, seed + 7));
  out.push_back(check_iteration_sensitivity(100, seed + 8));
  out.push_back(check_score_sensitivity(500, seed + 9));
  out.push_back(check_concentration_pass(50, seed + 10));
  out.push_back(check_concentration_halt(50, seed + 11));
  out.push_back(check_gaussian_calibration(seed + 12));
  out.push_back(check_sampler_moments(seed + 13));
  out.push_back(check_sampler_ks(seed + 14));
  out.push_back(check_counterexample());
  return out;
}

void write_certification_csv(std::ostream& out,
                             const std::vector<CheckResult>& results) {
  out << "check,passed,trials,violations,worst,detail\n";
  char buf[40];
  for (const CheckResult& r : results) {
    std::snprintf(buf, sizeof(buf), "%.17g", r.worst);
    std::string detail = r.detail;
    std::replace(detail.begin(), detail.end(), ',', ';');
    out << r.name << ',' << (r.passed ? 1 : 0) << ',' << r.trials << ','
        << r.violations << ',' << buf << ',' << detail << "\n";
  }
}

}  // namespace dpsco
