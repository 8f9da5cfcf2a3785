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

#include "dpsco/robust_stats.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"

using namespace dpsco;

TEST_CASE("median takes the lower middle for even counts") {
  CHECK(median_1d({3.0}) == 3.0);
  CHECK(median_1d({1.0, 2.0, 3.0}) == 2.0);
  CHECK(median_1d({1.0, 2.0, 3.0, 4.0}) == 2.0);
  CHECK(median_1d({4.0, 1.0, 3.0, 2.0}) == 2.0);
  CHECK_THROWS_AS(median_1d({}), std::invalid_argument);
}

TEST_CASE("trimmed mean drops floor(f*B) per tail") {
  CHECK(trimmed_mean_1d({0.0, 0.0, 0.0, 0.0, 1000.0}, 0.2) == 0.0);
  CHECK(trimmed_mean_1d({1.0, 2.0, 3.0, 4.0}, 0.25) == doctest::Approx(2.5));
  // f*B < 1 trims nothing.
  CHECK(trimmed_mean_1d({1.0, 5.0}, 0.25) == doctest::Approx(3.0));
  CHECK_THROWS_AS(trimmed_mean_1d({1.0}, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(trimmed_mean_1d({}, 0.1), std::invalid_argument);
}

TEST_CASE("coordinate statistic applies per column") {
  const std::vector<Vec> vs{{1.0, 10.0}, {2.0, 30.0}, {3.0, 20.0}};
  const RobustStatKind median{RobustStatVariant::kCoordinateMedian, 0.0};
  const Vec r = coord_robust_stat(vs, median);
  CHECK(r[0] == 2.0);
  CHECK(r[1] == 20.0);
  CHECK_THROWS_AS(
      coord_robust_stat({{1.0}, {1.0, 2.0}}, median), std::invalid_argument);
}

TEST_CASE("weiszfeld matches an independent optimizer") {
  const std::vector<Point2> pts{{0.0, 0.0}, {4.0, 0.0}, {1.0, 3.0}};
  const WeiszfeldResult r = geometric_median_weiszfeld(pts, 1e-12, 10000);
  CHECK(r.converged);
  CHECK(r.point[0] == doctest::Approx(1.30216948).epsilon(1e-6));
  CHECK(r.point[1] == doctest::Approx(1.04674578).epsilon(1e-6));
  CHECK(r.objective == doctest::Approx(6.540994549059533).epsilon(1e-10));
}

TEST_CASE("weiszfeld returns an anchor when it is optimal") {
  // Three collinear points: the middle one is the geometric median.
  const std::vector<Point2> pts{{0.0, 0.0}, {1.0, 0.0}, {5.0, 0.0}};
  const WeiszfeldResult r = geometric_median_weiszfeld(pts, 1e-12, 10000);
  CHECK(r.converged);
  CHECK(r.point[0] == 1.0);
  CHECK(r.point[1] == 0.0);
}

TEST_CASE("weiszfeld handles duplicated anchors") {
  const std::vector<Point2> pts{{0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0},
                                {9.0, 9.0}};
  const WeiszfeldResult r = geometric_median_weiszfeld(pts, 1e-12, 10000);
  CHECK(r.converged);
  CHECK(r.point[0] == 0.0);
  CHECK(r.point[1] == 0.0);
}

TEST_CASE("weiszfeld singleton") {
  const WeiszfeldResult r =
      geometric_median_weiszfeld({{2.0, -1.0}}, 1e-12, 10);
  CHECK(r.converged);
  CHECK(r.point[0] == 2.0);
  CHECK(r.point[1] == -1.0);
}
