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

#ifndef DPSCO_PROBLEM_HPP_
#define DPSCO_PROBLEM_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace dpsco {

using Vec = std::vector<double>;
using Point = Vec;
using Matrix = std::vector<Vec>;  // row-major, square
using Rng = std::mt19937_64;

// One user's payload: m loss-parameter vectors of identical dimension.
struct UserRecord {
  std::vector<Vec> samples;
};

struct Dataset {
  std::vector<UserRecord> users;
  int d = 0;
  int m = 0;
  std::uint64_t seed = 0;
  std::string descriptor;  // generator provenance, single token

  int n() const { return static_cast<int>(users.size()); }
};

enum class LossKind { kQuadraticDiagDominant, kLinear };

// A convex loss family with published constants. For the quadratic kind the
// per-sample loss is f(x;z) = 1/2 (x-z)^T A (x-z) with a shared symmetric
// diagonally dominant A; for the linear kind f(x;z) = -<x,z>.
struct LossModel {
  LossKind kind = LossKind::kQuadraticDiagDominant;
  double lipschitz_G = 0.0;  // l1-Lipschitz constant (linf gradient bound)
  double smooth_beta = 0.0;  // linf operator bound on the Hessian
  double radius_D = 1.0;     // linf radius of the domain
  Point center;              // domain center
  Point optimum;             // population minimizer, known for synthetic runs
  Matrix hessian;            // quadratic kind only
  Vec population_mean;       // E[z]
};

enum class DistKind { kGaussianMean, kLinearHardInstance };

struct Distribution {
  DistKind kind = DistKind::kGaussianMean;
  Vec mean_mu;
  double per_coordinate_std = 1.0;
  double truncation_bound = 0.0;  // <= 0 disables truncation
};

// Coordinate-wise projection onto the linf-ball of the given radius around
// center. Idempotent and non-expansive in both linf and l2.
Point project_linf(const Point& x, const Point& center, double radius);

bool in_domain(const LossModel& model, const Point& x, double slack = 1e-12);

// Per-sample gradient of the loss at x.
Vec sample_gradient(const LossModel& model, const Vec& z, const Point& x);

// Exact arithmetic mean of the user's m per-sample gradients, summed in
// sample order for bitwise reproducibility.
Vec user_avg_gradient(const LossModel& model, const UserRecord& user,
                      const Point& x);

struct QuadraticInstance {
  LossModel model;
  Dataset data;
};

// Synthetic quadratic family: one shared symmetric diagonally dominant
// Hessian with ||A||_inf = beta_target, samples drawn i.i.d. around a hidden
// optimum. G is published conservatively as beta * 2D * d.
QuadraticInstance make_quadratic_instance(int d, int n, int m,
                                          std::uint64_t seed,
                                          double beta_target,
                                          double sample_std = 0.1,
                                          double radius_D = 1.0);

struct LinearHardInstance {
  Distribution dist;
  LossModel model;
};

// The lower-bound hard instance: f(x;z) = -<x,z> over [-1,1]^d, with
// per-coordinate Normal(mu[k], m) samples truncated to [-G, G],
// G = truncation_c * sqrt(m * ln(mnd)).
LinearHardInstance make_linear_hard_instance(int d, int n, int m,
                                             std::uint64_t seed,
                                             double truncation_c = 3.0);

// n users of m i.i.d. samples; deterministic per seed.
Dataset sample_dataset(const Distribution& dist, int n, int m,
                       std::uint64_t seed);

// F(x) - F(x*), from the known closed form of the synthetic instance.
double excess_risk(const LossModel& model, const Point& x);

// sum_i |mu[i]| * 1(sign(mu[i]) != sign(x[i])), with sign(0) := +1.
double weighted_sign_error(const Vec& mu, const Point& x);

}  // namespace dpsco

#endif  // DPSCO_PROBLEM_HPP_
