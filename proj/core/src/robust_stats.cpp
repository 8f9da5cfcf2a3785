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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dpsco {

double median_1d(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median_1d: empty input");
  const std::size_t k = (values.size() - 1) / 2;  // lower-middle for even B
  std::nth_element(values.begin(), values.begin() + k, values.end());
  return values[k];
}

double trimmed_mean_1d(std::vector<double> values, double trim_fraction) {
  if (values.empty()) {
    throw std::invalid_argument("trimmed_mean_1d: empty input");
  }
  if (trim_fraction < 0.0 || trim_fraction >= 0.5) {
    throw std::invalid_argument("trimmed_mean_1d: trim_fraction in [0, 0.5)");
  }
  std::sort(values.begin(), values.end());
  const std::size_t b = values.size();
  const std::size_t k =
      static_cast<std::size_t>(std::floor(trim_fraction * b + 1e-12));
  double sum = 0.0;
  for (std::size_t i = k; i < b - k; ++i) sum += values[i];
  return sum / static_cast<double>(b - 2 * k);
}

Vec coord_robust_stat(const std::vector<Vec>& vectors,
                      const RobustStatKind& kind) {
  if (vectors.empty()) {
    throw std::invalid_argument("coord_robust_stat: empty input");
  }
  const std::size_t d = vectors.front().size();
  for (const Vec& v : vectors) {
    if (v.size() != d) {
      throw std::invalid_argument("coord_robust_stat: dimension mismatch");
    }
  }
  Vec out(d);
  std::vector<double> column(vectors.size());
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < vectors.size(); ++i) column[i] = vectors[i][j];
    out[j] = kind.variant == RobustStatVariant::kCoordinateMedian
                 ? median_1d(column)
                 : trimmed_mean_1d(column, kind.trim_fraction);
  }
  return out;
}

namespace {

double objective(const std::vector<Point2>& points, const Point2& x) {
  double acc = 0.0;
  for (const Point2& p : points) {
    acc += std::hypot(x[0] - p[0], x[1] - p[1]);
  }
  return acc;
}

}  // namespace

WeiszfeldResult geometric_median_weiszfeld(const std::vector<Point2>& points,
                                           double tol, int max_iter) {
  if (points.empty()) {
    throw std::invalid_argument("geometric_median_weiszfeld: no points");
  }
  if (tol <= 0.0) {
    throw std::invalid_argument("geometric_median_weiszfeld: tol must be > 0");
  }
  WeiszfeldResult result;
  if (points.size() == 1) {
    result.point = points.front();
    result.converged = true;
    return result;
  }

  // Collapse exact duplicates into weighted anchors.
  std::vector<Point2> anchors;
  std::vector<double> weights;
  for (const Point2& p : points) {
    bool merged = false;
    for (std::size_t i = 0; i < anchors.size(); ++i) {
      if (anchors[i][0] == p[0] && anchors[i][1] == p[1]) {
        weights[i] += 1.0;
        merged = true;
        break;
      }
    }
    if (!merged) {
      anchors.push_back(p);
      weights.push_back(1.0);
    }
  }

  // Anchor optimality: a is the exact geometric median when the pull of all
  // other points does not exceed the anchor's own weight.
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    double rx = 0.0, ry = 0.0;
    for (std::size_t j = 0; j < anchors.size(); ++j) {
      if (j == i) continue;
      const double dx = anchors[j][0] - anchors[i][0];
      const double dy = anchors[j][1] - anchors[i][1];
      const double dist = std::hypot(dx, dy);
      rx += weights[j] * dx / dist;
      ry += weights[j] * dy / dist;
    }
    if (std::hypot(rx, ry) <= weights[i]) {
      result.point = anchors[i];
      result.objective = objective(points, anchors[i]);
      result.converged = true;
      return result;
    }
  }

  // Weighted centroid start.
  Point2 x{0.0, 0.0};
  double wsum = 0.0;
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    x[0] += weights[i] * anchors[i][0];
    x[1] += weights[i] * anchors[i][1];
    wsum += weights[i];
  }
  x[0] /= wsum;
  x[1] /= wsum;

  for (int iter = 1; iter <= max_iter; ++iter) {
    // Jitter away from anchor coincidence in a fixed direction.
    for (std::size_t i = 0; i < anchors.size(); ++i) {
      if (std::hypot(x[0] - anchors[i][0], x[1] - anchors[i][1]) < 1e-12) {
        x[0] += 1e-9;
        x[1] += 1e-9;
      }
    }
    double num_x = 0.0, num_y = 0.0, denom = 0.0;
    for (std::size_t i = 0; i < anchors.size(); ++i) {
      const double dist =
          std::hypot(x[0] - anchors[i][0], x[1] - anchors[i][1]);
      const double w = weights[i] / dist;
      num_x += w * anchors[i][0];
      num_y += w * anchors[i][1];
      denom += w;
    }
    const Point2 next{num_x / denom, num_y / denom};
    const double step = std::hypot(next[0] - x[0], next[1] - x[1]);
    x = next;
    result.iterations = iter;
    if (step < tol) {
      result.converged = true;
      break;
    }
  }
  result.point = x;
  result.objective = objective(points, x);
  return result;
}

}  // namespace dpsco
