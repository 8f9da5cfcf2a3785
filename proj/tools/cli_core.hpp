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

#ifndef DPSCO_TOOLS_CLI_CORE_HPP_
#define DPSCO_TOOLS_CLI_CORE_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "dpsco/harness.hpp"
#include "dpsco/optimizer.hpp"

// Reusable command implementations behind the CLI front end, kept
// stream-based so tests can drive them in-process.

namespace dpsco::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kInvariantViolation = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kInfeasible = 3;

struct RunConfig {
  // Instance descriptor (synthetic quadratic family).
  int n = 1672;
  int m = 256;
  int d = 2;
  std::uint64_t seed = 1;
  double beta = 1.0;
  double sample_std = 0.05;

  // Privacy budget.
  double epsilon = 2.0;
  double delta = 0.05;

  // Optimizer overrides; negative means "use the derived default".
  double eta = -1.0;
  double tau = -1.0;
  double varsigma = -1.0;
  double upsilon = -1.0;
  int batch = -1;
  double noise_constant = 6.0;
  std::string stat = "median";  // median | trimmed-mean
  double trim_fraction = 0.25;
  bool debug_no_noise = false;

  // Subcommand-specific knobs.
  double alpha = 1e-3;              // counterexample
  std::string grid = "1672x256";   // sweep, "NxM,NxM,..."
  int seeds = 5;                    // sweep seed count, derived from `seed`
  std::string pipeline = "all";     // sweep: robust|naive-baseline|non-private|all

  // Output.
  std::string output;        // path; empty writes tables to stdout
  std::string format = "csv";  // csv | json
};

// Flat key=value config file, one pair per line, '#' comments. Keys already
// set on the command line keep their values (flags > file > defaults).
// Throws std::runtime_error naming the offending key on unknown or
// malformed input.
void apply_config_file(const std::string& path,
                       const std::set<std::string>& locked_keys,
                       RunConfig* cfg);

// Derived Theorem-style parameters for the configured instance, with
// overrides applied and validated. Echo lines (formula provenance per
// parameter) are appended to *echo when given.
DpSgdConfig derive_params(const RunConfig& cfg,
                          std::vector<std::string>* echo);

int cmd_run(const RunConfig& cfg, std::ostream& out, std::ostream& log);
int cmd_sensitivity(const RunConfig& cfg, std::ostream& out,
                    std::ostream& log);
int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream* plot,
              std::ostream& log);
int cmd_counterexample(const RunConfig& cfg, std::ostream& out);
int cmd_certify(const RunConfig& cfg, std::ostream& out, std::ostream& log);

std::vector<UtilityGridPoint> parse_grid(const std::string& grid);

}  // namespace dpsco::cli

#endif  // DPSCO_TOOLS_CLI_CORE_HPP_
