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

#include "dpsco/problem.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dpsco {

namespace {

double sign_pos(double v) { return v < 0.0 ? -1.0 : 1.0; }  // sign(0) := +1

}  // namespace

Point project_linf(const Point& x, const Point& center, double radius) {
  if (x.size() != center.size()) {
    throw std::invalid_argument("project_linf: dimension mismatch");
  }
  if (radius < 0.0) {
    throw std::invalid_argument("project_linf: negative radius");
  }
  Point out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    out[j] = std::clamp(x[j], center[j] - radius, center[j] + radius);
  }
  return out;
}

bool in_domain(const LossModel& model, const Point& x, double slack) {
  if (x.size() != model.center.size()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (std::abs(x[j] - model.center[j]) > model.radius_D + slack) return false;
  }
  return true;
}

Vec sample_gradient(const LossModel& model, const Vec& z, const Point& x) {
  const std::size_t d = x.size();
  if (z.size() != d) {
    throw std::invalid_argument("sample_gradient: dimension mismatch");
  }
  Vec g(d, 0.0);
  switch (model.kind) {
    case LossKind::kQuadraticDiagDominant:
      // grad of 1/2 (x-z)^T A (x-z) is A (x-z)
      for (std::size_t i = 0; i < d; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
          acc += model.hessian[i][j] * (x[j] - z[j]);
        }
        g[i] = acc;
      }
      break;
    case LossKind::kLinear:
      for (std::size_t i = 0; i < d; ++i) g[i] = -z[i];
      break;
  }
  return g;
}

Vec user_avg_gradient(const LossModel& model, const UserRecord& user,
                      const Point& x) {
  if (user.samples.empty()) {
    throw std::invalid_argument("user_avg_gradient: empty user");
  }
  Vec sum(x.size(), 0.0);
  for (const Vec& z : user.samples) {
    const Vec g = sample_gradient(model, z, x);
    for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += g[j];
  }
  const double inv = 1.0 / static_cast<double>(user.samples.size());
  for (double& v : sum) v *= inv;
  return sum;
}

QuadraticInstance make_quadratic_instance(int d, int n, int m,
                                          std::uint64_t seed,
                                          double beta_target,
                                          double sample_std, double radius_D) {
  if (d < 1 || n < 1 || m < 1) {
    throw std::invalid_argument("make_quadratic_instance: d, n, m must be >= 1");
  }
  if (beta_target <= 0.0 || sample_std < 0.0 || radius_D <= 0.0) {
    throw std::invalid_argument("make_quadratic_instance: bad scale argument");
  }
  Rng rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  // Random symmetric matrix, off-diagonal rows rescaled to guarantee
  // diagonal dominance, then the whole matrix scaled to ||A||_inf = beta.
  Matrix a(d, Vec(d, 0.0));
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      const double v = unit(rng);
      if (i == j) {
        a[i][j] = 0.5 + 0.5 * std::abs(v);  // keep the diagonal bounded away from 0
      } else {
        a[i][j] = v;
        a[j][i] = v;
      }
    }
  }
  double off_scale = 1.0;
  for (int i = 0; i < d; ++i) {
    double off = 0.0;
    for (int j = 0; j < d; ++j) {
      if (j != i) off += std::abs(a[i][j]);
    }
    if (off > 0.0) off_scale = std::min(off_scale, 0.9 * a[i][i] / off);
  }
  double norm_inf = 0.0;
  for (int i = 0; i < d; ++i) {
    double row = a[i][i];
    for (int j = 0; j < d; ++j) {
      if (j != i) {
        a[i][j] *= off_scale;
        row += std::abs(a[i][j]);
      }
    }
    norm_inf = std::max(norm_inf, row);
  }
  const double scale = beta_target / norm_inf;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) a[i][j] *= scale;
  }

  LossModel model;
  model.kind = LossKind::kQuadraticDiagDominant;
  model.smooth_beta = beta_target;
  model.radius_D = radius_D;
  model.center.assign(d, 0.0);
  model.hessian = std::move(a);
  // Worst-case linf gradient over the domain, converted through the l1 dual.
  model.lipschitz_G = beta_target * 2.0 * radius_D * static_cast<double>(d);

  model.optimum.resize(d);
  for (int k = 0; k < d; ++k) model.optimum[k] = 0.5 * radius_D * unit(rng);
  model.population_mean = model.optimum;

  Distribution dist;
  dist.kind = DistKind::kGaussianMean;
  dist.mean_mu = model.optimum;
  dist.per_coordinate_std = sample_std;
  dist.truncation_bound = 0.0;

  QuadraticInstance out;
  out.model = std::move(model);
  out.data = sample_dataset(dist, n, m, rng());
  out.data.descriptor = "quadratic-diag-dominant";
  out.data.seed = seed;
  return out;
}

LinearHardInstance make_linear_hard_instance(int d, int n, int m,
                                             std::uint64_t seed,
                                             double truncation_c) {
  if (d < 1 || n < 1 || m < 1) {
    throw std::invalid_argument("make_linear_hard_instance: d, n, m must be >= 1");
  }
  Rng rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  const double md = static_cast<double>(m) * n * d;
  const double bound =
      truncation_c * std::sqrt(static_cast<double>(m) * std::log(std::max(md, 3.0)));

  LinearHardInstance out;
  out.dist.kind = DistKind::kLinearHardInstance;
  out.dist.mean_mu.resize(d);
  for (int k = 0; k < d; ++k) out.dist.mean_mu[k] = unit(rng);
  out.dist.per_coordinate_std = std::sqrt(static_cast<double>(m));
  out.dist.truncation_bound = bound;

  out.model.kind = LossKind::kLinear;
  out.model.smooth_beta = 0.0;
  out.model.radius_D = 1.0;
  out.model.center.assign(d, 0.0);
  out.model.lipschitz_G = bound;
  out.model.population_mean = out.dist.mean_mu;
  out.model.optimum.resize(d);
  for (int k = 0; k < d; ++k) out.model.optimum[k] = sign_pos(out.dist.mean_mu[k]);
  return out;
}

Dataset sample_dataset(const Distribution& dist, int n, int m,
                       std::uint64_t seed) {
  if (n < 1 || m < 1) {
    throw std::invalid_argument("sample_dataset: n, m must be >= 1");
  }
  const int d = static_cast<int>(dist.mean_mu.size());
  Rng rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  Dataset data;
  data.d = d;
  data.m = m;
  data.seed = seed;
  data.descriptor = dist.kind == DistKind::kGaussianMean
                        ? "gaussian-mean"
                        : "linear-hard-instance";
  data.users.resize(n);
  for (int i = 0; i < n; ++i) {
    data.users[i].samples.resize(m);
    for (int s = 0; s < m; ++s) {
      Vec& z = data.users[i].samples[s];
      z.resize(d);
      for (int k = 0; k < d; ++k) {
        double v = dist.mean_mu[k] + dist.per_coordinate_std * gauss(rng);
        if (dist.truncation_bound > 0.0) {
          v = std::clamp(v, -dist.truncation_bound, dist.truncation_bound);
        }
        z[k] = v;
      }
    }
  }
  return data;
}

double excess_risk(const LossModel& model, const Point& x) {
  const std::size_t d = x.size();
  if (d != model.population_mean.size()) {
    throw std::invalid_argument("excess_risk: dimension mismatch");
  }
  switch (model.kind) {
    case LossKind::kQuadraticDiagDominant: {
      // F(x) - F(mu) = 1/2 (x-mu)^T A (x-mu)
      double acc = 0.0;
      for (std::size_t i = 0; i < d; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
          row += model.hessian[i][j] * (x[j] - model.population_mean[j]);
        }
        acc += (x[i] - model.population_mean[i]) * row;
      }
      return std::max(0.0, 0.5 * acc);
    }
    case LossKind::kLinear: {
      double acc = 0.0;
      for (std::size_t k = 0; k < d; ++k) {
        acc += (sign_pos(model.population_mean[k]) - x[k]) *
               model.population_mean[k];
      }
      return std::max(0.0, acc);
    }
  }
  throw std::runtime_error("excess_risk: unknown-population");
}

double weighted_sign_error(const Vec& mu, const Point& x) {
  if (mu.size() != x.size()) {
    throw std::invalid_argument("weighted_sign_error: dimension mismatch");
  }
  double acc = 0.0;
  for (std::size_t k = 0; k < mu.size(); ++k) {
    if (sign_pos(mu[k]) != sign_pos(x[k])) acc += std::abs(mu[k]);
  }
  return acc;
}

}  // namespace dpsco
