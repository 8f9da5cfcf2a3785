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

#include "doctest.h"

using namespace dpsco;

TEST_CASE("gaussian sigma matches the closed form") {
  CHECK(gaussian_mechanism_sigma(1.0, {1.0, 1e-5}) ==
        doctest::Approx(4.84480526260539).epsilon(1e-14));
  CHECK(gaussian_mechanism_sigma(0.0, {1.0, 1e-5}) == 0.0);
  CHECK(gaussian_mechanism_sigma(2.0, {1.0, 1e-5}) ==
        doctest::Approx(2.0 * 4.84480526260539).epsilon(1e-14));
  CHECK_THROWS_AS(gaussian_mechanism_sigma(1.0, {0.0, 1e-5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(gaussian_mechanism_sigma(1.0, {1.0, 0.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(gaussian_mechanism_sigma(-1.0, {1.0, 1e-5}),
                  std::invalid_argument);
}

TEST_CASE("zero sensitivity returns the value unchanged") {
  Rng rng(1);
  const Vec v{1.0, -2.0};
  const Vec out = gaussian_mechanism(v, 0.0, {1.0, 1e-5}, rng);
  CHECK(out[0] == 1.0);
  CHECK(out[1] == -2.0);
  // No randomness consumed.
  Rng fresh(1);
  CHECK(rng() == fresh());
}

TEST_CASE("laplace sampler is deterministic per seed and unbiased-ish") {
  Rng a(7), b(7);
  for (int i = 0; i < 10; ++i) {
    CHECK(laplace_sample(1.0, a) == laplace_sample(1.0, b));
  }
  CHECK_THROWS_AS(laplace_sample(0.0, a), std::invalid_argument);

  Rng rng(123);
  double sum = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) sum += laplace_sample(2.0, rng);
  CHECK(std::abs(sum / n) < 0.1);
}

TEST_CASE("above threshold in debug mode compares exactly") {
  Rng rng(1);
  AboveThreshold at(1.0, 0.5, rng, /*insecure_debug_no_noise=*/true);
  CHECK(at.noisy_threshold() == 1.0);
  CHECK(at.query(2.0, rng) == Answer::kTop);
  CHECK(at.query(1.0, rng) == Answer::kTop);  // ties answer top
  CHECK(at.query(0.5, rng) == Answer::kBottom);
  CHECK(at.halted());
  CHECK(at.queries_answered() == 3);
  CHECK_THROWS_AS(at.query(5.0, rng), std::logic_error);
}

TEST_CASE("above threshold halts exactly once") {
  Rng rng(42);
  AboveThreshold at(0.0, 1.0, rng);
  int answers = 0;
  while (!at.halted() && answers < 10000) {
    at.query(-100.0, rng);  // far below threshold, must halt fast
    ++answers;
  }
  CHECK(at.halted());
  CHECK(answers < 100);
}

TEST_CASE("above threshold rejects nonpositive epsilon") {
  Rng rng(1);
  CHECK_THROWS_AS(AboveThreshold(0.0, 0.0, rng), std::invalid_argument);
}
