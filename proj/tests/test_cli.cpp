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

#include "cli_core.hpp"

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "doctest.h"

using namespace dpsco::cli;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& content) {
    char name[] = "/tmp/dpsco-test-XXXXXX";
    const int fd = mkstemp(name);
    REQUIRE(fd != -1);
    close(fd);
    path = name;
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("config file applies values and honors flag precedence") {
  TempFile file("# comment\nn = 500\nepsilon = 1.5\n\nstat = trimmed-mean\n");
  RunConfig cfg;
  cfg.epsilon = 9.0;  // pretend the flag was passed
  apply_config_file(file.path, {"epsilon"}, &cfg);
  CHECK(cfg.n == 500);
  CHECK(cfg.epsilon == 9.0);  // flag wins over file
  CHECK(cfg.stat == "trimmed-mean");
}

TEST_CASE("config file rejects unknown keys and malformed lines") {
  {
    TempFile file("bogus_key = 3\n");
    RunConfig cfg;
    CHECK_THROWS_WITH_AS(apply_config_file(file.path, {}, &cfg),
                         doctest::Contains("bogus_key"), std::runtime_error);
  }
  {
    TempFile file("this is not a pair\n");
    RunConfig cfg;
    CHECK_THROWS_AS(apply_config_file(file.path, {}, &cfg),
                    std::runtime_error);
  }
  {
    TempFile file("n = twelve\n");
    RunConfig cfg;
    CHECK_THROWS_AS(apply_config_file(file.path, {}, &cfg),
                    std::runtime_error);
  }
  RunConfig cfg;
  CHECK_THROWS_AS(apply_config_file("/nonexistent/file.cfg", {}, &cfg),
                  std::runtime_error);
}

TEST_CASE("derived parameters echo formulas and react to epsilon") {
  RunConfig cfg;  // defaults are feasible
  std::vector<std::string> echo;
  const auto params_lo = derive_params(cfg, &echo);
  CHECK(!echo.empty());
  bool saw_formula = false;
  for (const auto& line : echo) {
    if (line.find("ceil(100 ln(mnd/delta)/eps)") != std::string::npos) {
      saw_formula = true;
    }
  }
  CHECK(saw_formula);

  RunConfig hi = cfg;
  hi.epsilon = 4.0;
  const auto params_hi = derive_params(hi, nullptr);
  CHECK(params_hi.batch_users_B < params_lo.batch_users_B);
  CHECK(params_hi.tau == doctest::Approx(params_lo.tau));
}

TEST_CASE("eta beyond the contractive range is rejected by name") {
  RunConfig cfg;
  cfg.eta = 5.0;  // 2/beta = 2
  CHECK_THROWS_WITH_AS(derive_params(cfg, nullptr),
                       doctest::Contains("contractivity"),
                       std::runtime_error);
}

TEST_CASE("infeasible instances raise the dedicated error") {
  RunConfig cfg;
  cfg.n = 50;  // far below one batch at the default budget
  CHECK_THROWS_AS(derive_params(cfg, nullptr), dpsco::InfeasibleConfig);
}

TEST_CASE("grid parsing") {
  const auto grid = parse_grid("64x8, 128x16");
  REQUIRE(grid.size() == 2);
  CHECK(grid[0].n == 64);
  CHECK(grid[0].m == 8);
  CHECK(grid[1].n == 128);
  CHECK(grid[1].m == 16);
  CHECK_THROWS_AS(parse_grid("64"), std::runtime_error);
  CHECK_THROWS_AS(parse_grid("0x8"), std::runtime_error);
  CHECK_THROWS_AS(parse_grid(""), std::runtime_error);
}

TEST_CASE("one-point sweep emits a csv with one row per pipeline seed") {
  RunConfig cfg;
  cfg.grid = "64x8";
  cfg.seeds = 1;
  cfg.d = 2;
  cfg.pipeline = "non-private";
  std::ostringstream out, log;
  CHECK(cmd_sweep(cfg, out, nullptr, log) == kOk);
  const std::string text = out.str();
  CHECK(text.rfind("nm,n,m,pipeline,seed,excess_risk,feasible,passed\n", 0) ==
        0);
  // header + exactly one data row
  CHECK(std::count(text.begin(), text.end(), '\n') == 2);
}

TEST_CASE("counterexample command reports the jump") {
  RunConfig cfg;
  cfg.alpha = 1e-3;
  std::ostringstream out;
  CHECK(cmd_counterexample(cfg, out) == kOk);
  CHECK(out.str().find("l2 shift") != std::string::npos);
  cfg.alpha = 0.5;
  std::ostringstream bad;
  CHECK_THROWS_AS(cmd_counterexample(cfg, bad), std::runtime_error);
}
