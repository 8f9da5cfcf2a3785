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

#include <fstream>
#include <iostream>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "cli_core.hpp"

namespace {

using dpsco::cli::RunConfig;

struct CommonFlags {
  std::string config_file;
  std::set<std::string> locked;
};

// Registers the shared instance/budget/override flags on a subcommand and
// records which ones the user actually passed, so the config file cannot
// overwrite them.
void add_common_flags(CLI::App* cmd, RunConfig* cfg, CommonFlags* common) {
  auto lock = [common](const std::string& key) {
    return [common, key](const std::string&) { common->locked.insert(key); };
  };
  cmd->add_option("--config", common->config_file,
                  "flat key=value config file (flags win)");
  cmd->add_option("--n", cfg->n, "number of users")->check(CLI::PositiveNumber)
      ->each(lock("n"));
  cmd->add_option("--m", cfg->m, "samples per user")
      ->check(CLI::PositiveNumber)->each(lock("m"));
  cmd->add_option("--d", cfg->d, "dimension")->check(CLI::PositiveNumber)
      ->each(lock("d"));
  cmd->add_option("--seed", cfg->seed, "root seed")->each(lock("seed"));
  cmd->add_option("--beta", cfg->beta, "smoothness target")
      ->each(lock("beta"));
  cmd->add_option("--sample-std", cfg->sample_std,
                  "per-coordinate sample noise")->each(lock("sample_std"));
  cmd->add_option("--epsilon", cfg->epsilon, "privacy epsilon")
      ->each(lock("epsilon"));
  cmd->add_option("--delta", cfg->delta, "privacy delta")
      ->each(lock("delta"));
  cmd->add_option("--eta", cfg->eta, "step size override")->each(lock("eta"));
  cmd->add_option("--tau", cfg->tau, "score scale override")
      ->each(lock("tau"));
  cmd->add_option("--varsigma", cfg->varsigma,
                  "estimator threshold override")->each(lock("varsigma"));
  cmd->add_option("--upsilon", cfg->upsilon, "test threshold override")
      ->each(lock("upsilon"));
  cmd->add_option("--batch", cfg->batch, "users per step override")
      ->each(lock("batch"));
  cmd->add_option("--noise-constant", cfg->noise_constant,
                  "phase noise multiplier")->each(lock("noise_constant"));
  cmd->add_option("--stat", cfg->stat, "median | trimmed-mean")
      ->each(lock("stat"));
  cmd->add_option("--trim-fraction", cfg->trim_fraction,
                  "per-tail trim fraction")->each(lock("trim_fraction"));
  cmd->add_flag("--debug-no-noise", cfg->debug_no_noise,
                "disable all noise (breaks privacy; debugging only)")
      ->each(lock("debug_no_noise"));
  cmd->add_option("--output", cfg->output, "output file (default stdout)")
      ->each(lock("output"));
  cmd->add_option("--format", cfg->format, "csv | json")
      ->each(lock("format"));
}

int dispatch(const std::string& name, const RunConfig& cfg) {
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) {
      std::cerr << "cannot open output file: " << cfg.output << "\n";
      return dpsco::cli::kUsageError;
    }
    out = &file;
  }
  if (name == "run") return dpsco::cli::cmd_run(cfg, *out, std::cerr);
  if (name == "sensitivity") {
    return dpsco::cli::cmd_sensitivity(cfg, *out, std::cerr);
  }
  if (name == "sweep") {
    std::ofstream plot;
    if (!cfg.output.empty()) plot.open(cfg.output + ".gp");
    std::ostream* plot_out = plot.is_open() ? &plot : nullptr;
    return dpsco::cli::cmd_sweep(cfg, *out, plot_out, std::cerr);
  }
  if (name == "counterexample") {
    return dpsco::cli::cmd_counterexample(cfg, *out);
  }
  if (name == "certify") return dpsco::cli::cmd_certify(cfg, *out, std::cerr);
  std::cerr << "unknown subcommand: " << name << "\n";
  return dpsco::cli::kUsageError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "User-level differentially private stochastic convex optimization "
      "via coordinate-wise robust statistics"};
  app.require_subcommand(1);

  RunConfig cfg;
  CommonFlags common;

  CLI::App* run = app.add_subcommand(
      "run", "one robust SGD phase with trajectory logging");
  CLI::App* sensitivity = app.add_subcommand(
      "sensitivity", "coupled neighboring-trajectory stability probe");
  CLI::App* sweep =
      app.add_subcommand("sweep", "utility experiment over an (n, m) grid");
  CLI::App* counterexample = app.add_subcommand(
      "counterexample", "geometric-median instability demonstration");
  CLI::App* certify =
      app.add_subcommand("certify", "run the full certification suite");

  for (CLI::App* cmd : {run, sensitivity, sweep, counterexample, certify}) {
    add_common_flags(cmd, &cfg, &common);
  }
  counterexample->add_option("--alpha", cfg.alpha, "perturbation size");
  sweep->add_option("--grid", cfg.grid, "comma-separated NxM pairs")
      ->each([&common](const std::string&) { common.locked.insert("grid"); });
  sweep->add_option("--seeds", cfg.seeds, "seeds per grid point")
      ->each([&common](const std::string&) { common.locked.insert("seeds"); });
  sweep->add_option("--pipeline", cfg.pipeline,
                    "robust | naive-baseline | non-private | all")
      ->each([&common](const std::string&) {
        common.locked.insert("pipeline");
      });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return dpsco::cli::kUsageError;
  }

  try {
    if (!common.config_file.empty()) {
      dpsco::cli::apply_config_file(common.config_file, common.locked, &cfg);
    }
    return dispatch(app.get_subcommands().front()->get_name(), cfg);
  } catch (const dpsco::InfeasibleConfig& e) {
    std::cerr << "infeasible configuration: " << e.what() << "\n";
    return dpsco::cli::kInfeasible;
  } catch (const dpsco::ConstructionFailure& e) {
    std::cerr << "infeasible construction: " << e.what() << "\n";
    return dpsco::cli::kInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return dpsco::cli::kUsageError;
  }
}
