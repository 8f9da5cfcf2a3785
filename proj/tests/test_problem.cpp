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

#include <cmath>
#include <stdexcept>

#include "doctest.h"

using namespace dpsco;

TEST_CASE("project_linf clips coordinate-wise") {
  const Point x{3.0, -3.0};
  const Point center{0.0, 0.0};
  const Point p = project_linf(x, center, 1.0);
  CHECK(p[0] == 1.0);
  CHECK(p[1] == -1.0);

  const Point inside{0.3, -0.7};
  const Point q = project_linf(inside, center, 1.0);
  CHECK(q[0] == 0.3);
  CHECK(q[1] == -0.7);

  // Idempotence.
  const Point pp = project_linf(p, center, 1.0);
  CHECK(pp[0] == p[0]);
  CHECK(pp[1] == p[1]);

  CHECK_THROWS_AS(project_linf(x, center, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(project_linf(x, Point{0.0}, 1.0), std::invalid_argument);
}

TEST_CASE("linear gradient is the negated sample") {
  LossModel model;
  model.kind = LossKind::kLinear;
  const Vec z{2.0, 3.0};
  const Vec g = sample_gradient(model, z, Point{0.0, 0.0});
  CHECK(g[0] == -2.0);
  CHECK(g[1] == -3.0);
}

TEST_CASE("user average gradient sums in sample order") {
  LossModel model;
  model.kind = LossKind::kLinear;
  UserRecord user;
  user.samples = {{1.0, 0.0}, {3.0, 2.0}};
  const Vec g = user_avg_gradient(model, user, Point{0.0, 0.0});
  CHECK(g[0] == doctest::Approx(-2.0).epsilon(1e-15));
  CHECK(g[1] == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("quadratic instance publishes its constants honestly") {
  const auto inst = make_quadratic_instance(4, 20, 8, 7, 1.5);
  const Matrix& a = inst.model.hessian;
  double max_row = 0.0;
  for (int i = 0; i < 4; ++i) {
    double off = 0.0, row = 0.0;
    for (int j = 0; j < 4; ++j) {
      row += std::abs(a[i][j]);
      if (j != i) off += std::abs(a[i][j]);
    }
    CHECK(a[i][i] >= off);  // diagonal dominance
    max_row = std::max(max_row, row);
    for (int j = 0; j < 4; ++j) CHECK(a[i][j] == a[j][i]);
  }
  CHECK(max_row == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(inst.model.smooth_beta == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(inst.model.lipschitz_G ==
        doctest::Approx(1.5 * 2.0 * 1.0 * 4).epsilon(1e-12));
  CHECK(inst.data.n() == 20);
  CHECK(inst.data.m == 8);
  CHECK(in_domain(inst.model, inst.model.optimum));
}

TEST_CASE("dataset sampling is deterministic per seed") {
  const auto a = make_quadratic_instance(3, 5, 4, 42, 1.0);
  const auto b = make_quadratic_instance(3, 5, 4, 42, 1.0);
  for (int u = 0; u < 5; ++u) {
    for (int s = 0; s < 4; ++s) {
      for (int j = 0; j < 3; ++j) {
        CHECK(a.data.users[u].samples[s][j] == b.data.users[u].samples[s][j]);
      }
    }
  }
  const auto c = make_quadratic_instance(3, 5, 4, 43, 1.0);
  CHECK(a.data.users[0].samples[0][0] != c.data.users[0].samples[0][0]);
}

TEST_CASE("excess risk of the linear hard instance") {
  LossModel model;
  model.kind = LossKind::kLinear;
  model.population_mean = {0.5};
  model.optimum = {1.0};
  model.radius_D = 1.0;
  model.center = {0.0};
  CHECK(excess_risk(model, Point{-1.0}) == doctest::Approx(1.0));
  CHECK(excess_risk(model, Point{1.0}) == doctest::Approx(0.0));
}

TEST_CASE("quadratic excess risk vanishes at the optimum") {
  const auto inst = make_quadratic_instance(3, 8, 4, 11, 2.0);
  CHECK(excess_risk(inst.model, inst.model.optimum) ==
        doctest::Approx(0.0).epsilon(1e-12));
  Point off = inst.model.optimum;
  off[0] += 0.1;
  CHECK(excess_risk(inst.model, off) > 0.0);
}

TEST_CASE("weighted sign error treats zero as positive") {
  const Vec mu{0.5, -0.25, 0.0};
  CHECK(weighted_sign_error(mu, Point{1.0, -1.0, 1.0}) == doctest::Approx(0.0));
  CHECK(weighted_sign_error(mu, Point{-1.0, -1.0, 1.0}) ==
        doctest::Approx(0.5));
  CHECK(weighted_sign_error(mu, Point{1.0, 1.0, 1.0}) == doctest::Approx(0.25));
}

TEST_CASE("linear hard instance truncates samples at G") {
  const auto hard = make_linear_hard_instance(2, 6, 9, 5);
  const Dataset data = sample_dataset(hard.dist, 6, 9, 5);
  for (const UserRecord& u : data.users) {
    for (const Vec& z : u.samples) {
      for (double v : z) {
        CHECK(std::abs(v) <= hard.model.lipschitz_G + 1e-12);
      }
    }
  }
}
