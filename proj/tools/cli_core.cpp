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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "dpsco/certify.hpp"
#include "json.hpp"

namespace dpsco::cli {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

RobustStatKind stat_kind(const RunConfig& cfg) {
  if (cfg.stat == "median") {
    return {RobustStatVariant::kCoordinateMedian, 0.0};
  }
  if (cfg.stat == "trimmed-mean") {
    return {RobustStatVariant::kCoordinateTrimmedMean, cfg.trim_fraction};
  }
  throw std::runtime_error("unknown stat '" + cfg.stat +
                           "' (median | trimmed-mean)");
}

}  // namespace

void apply_config_file(const std::string& path,
                       const std::set<std::string>& locked_keys,
                       RunConfig* cfg) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);

  const std::map<std::string, std::function<void(const std::string&)>>
      setters = {
          {"n", [&](const std::string& v) { cfg->n = std::stoi(v); }},
          {"m", [&](const std::string& v) { cfg->m = std::stoi(v); }},
          {"d", [&](const std::string& v) { cfg->d = std::stoi(v); }},
          {"seed", [&](const std::string& v) { cfg->seed = std::stoull(v); }},
          {"beta", [&](const std::string& v) { cfg->beta = std::stod(v); }},
          {"sample_std",
           [&](const std::string& v) { cfg->sample_std = std::stod(v); }},
          {"epsilon",
           [&](const std::string& v) { cfg->epsilon = std::stod(v); }},
          {"delta", [&](const std::string& v) { cfg->delta = std::stod(v); }},
          {"eta", [&](const std::string& v) { cfg->eta = std::stod(v); }},
          {"tau", [&](const std::string& v) { cfg->tau = std::stod(v); }},
          {"varsigma",
           [&](const std::string& v) { cfg->varsigma = std::stod(v); }},
          {"upsilon",
           [&](const std::string& v) { cfg->upsilon = std::stod(v); }},
          {"batch", [&](const std::string& v) { cfg->batch = std::stoi(v); }},
          {"noise_constant",
           [&](const std::string& v) { cfg->noise_constant = std::stod(v); }},
          {"stat", [&](const std::string& v) { cfg->stat = v; }},
          {"trim_fraction",
           [&](const std::string& v) { cfg->trim_fraction = std::stod(v); }},
          {"debug_no_noise",
           [&](const std::string& v) { cfg->debug_no_noise = v == "1" ||
                                                             v == "true"; }},
          {"alpha", [&](const std::string& v) { cfg->alpha = std::stod(v); }},
          {"grid", [&](const std::string& v) { cfg->grid = v; }},
          {"seeds", [&](const std::string& v) { cfg->seeds = std::stoi(v); }},
          {"pipeline", [&](const std::string& v) { cfg->pipeline = v; }},
          {"output", [&](const std::string& v) { cfg->output = v; }},
          {"format", [&](const std::string& v) { cfg->format = v; }},
      };

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("config line " + std::to_string(line_no) +
                               ": expected key=value, got '" + text + "'");
    }
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    const auto it = setters.find(key);
    if (it == setters.end()) {
      throw std::runtime_error("config line " + std::to_string(line_no) +
                               ": unknown key '" + key + "'");
    }
    if (locked_keys.count(key)) continue;  // flags beat the file
    try {
      it->second(value);
    } catch (const std::exception&) {
      throw std::runtime_error("config line " + std::to_string(line_no) +
                               ": bad value for '" + key + "': " + value);
    }
  }
}

DpSgdConfig derive_params(const RunConfig& cfg,
                          std::vector<std::string>* echo) {
  const double radius_d = 1.0;
  const double g = cfg.beta * 2.0 * radius_d * cfg.d;
  std::vector<std::string> warnings;
  DpSgdConfig params =
      default_params(cfg.n, cfg.m, cfg.d, {cfg.epsilon, cfg.delta}, g,
                     radius_d, cfg.beta, &warnings);
  params.kind = stat_kind(cfg);
  params.noise_constant = cfg.noise_constant;
  params.insecure_debug_no_noise = cfg.debug_no_noise;
  if (cfg.batch > 0) params.batch_users_B = cfg.batch;
  if (cfg.tau > 0.0) params.tau = cfg.tau;
  if (cfg.varsigma >= 0.0) params.varsigma = cfg.varsigma;
  if (cfg.upsilon >= 0.0) params.upsilon = cfg.upsilon;
  if (cfg.eta >= 0.0) params.eta = cfg.eta;
  if (cfg.beta > 0.0 && params.eta > 2.0 / cfg.beta) {
    throw std::runtime_error(
        "eta = " + std::to_string(params.eta) +
        " violates the contractivity precondition eta <= 2/beta");
  }
  if (echo != nullptr) {
    for (const std::string& w : warnings) echo->push_back("warning: " + w);
    const auto lines = describe_params(params, cfg.n, cfg.m, cfg.d);
    echo->insert(echo->end(), lines.begin(), lines.end());
  }
  return params;
}

std::vector<UtilityGridPoint> parse_grid(const std::string& grid) {
  std::vector<UtilityGridPoint> points;
  std::stringstream ss(grid);
  std::string token;
  while (std::getline(ss, token, ',')) {
    token = trim(token);
    if (token.empty()) continue;
    const auto x = token.find('x');
    if (x == std::string::npos) {
      throw std::runtime_error("grid entry '" + token +
                               "': expected NxM, e.g. 512x64");
    }
    UtilityGridPoint p;
    try {
      p.n = std::stoi(token.substr(0, x));
      p.m = std::stoi(token.substr(x + 1));
    } catch (const std::exception&) {
      throw std::runtime_error("grid entry '" + token + "': bad number");
    }
    if (p.n < 1 || p.m < 1) {
      throw std::runtime_error("grid entry '" + token + "': must be >= 1");
    }
    points.push_back(p);
  }
  if (points.empty()) throw std::runtime_error("empty grid");
  return points;
}

int cmd_run(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  std::vector<std::string> echo;
  const DpSgdConfig params = derive_params(cfg, &echo);
  for (const std::string& line : echo) log << line << "\n";

  const QuadraticInstance inst = make_quadratic_instance(
      cfg.d, cfg.n, cfg.m, cfg.seed, cfg.beta, cfg.sample_std);
  Rng rng(cfg.seed);
  const PhaseResult phase =
      dpsgd_phase(inst.data, inst.model, params, inst.model.center, rng);

  std::vector<double> risks;
  risks.reserve(phase.log.iterates.size());
  for (const Point& x : phase.log.iterates) {
    risks.push_back(excess_risk(inst.model, x));
  }
  write_trajectory_csv(out, /*phase=*/1, phase.log, {}, risks);

  log << "concentration test: " << (phase.log.passed ? "passed" : "halted")
      << "\n";
  log << "discarded users: " << phase.log.discarded_users << "\n";
  log << "excess risk of output: " << excess_risk(inst.model, phase.output)
      << "\n";
  return kOk;
}

int cmd_sensitivity(const RunConfig& cfg, std::ostream& out,
                    std::ostream& log) {
  std::vector<std::string> echo;
  const DpSgdConfig params = derive_params(cfg, &echo);
  for (const std::string& line : echo) log << line << "\n";

  const QuadraticInstance inst = make_quadratic_instance(
      cfg.d, cfg.n, cfg.m, cfg.seed, cfg.beta, cfg.sample_std);
  Rng rng(cfg.seed);
  const double rho = 1.0 / params.tau;
  NeighborSpec spec;
  spec.swap_user_index = 0;
  spec.alignment = Alignment::kAligned;
  spec.rho = rho;
  const NeighborPair pair = neighboring_pair(inst.data, inst.model, params,
                                             inst.model.center, spec, rng);
  const SensitivityReport report = measure_iteration_sensitivity(
      inst.model, pair, params, inst.model.center, rho);

  out << "step,linf_gap,gap_bound,score_gap\n";
  for (std::size_t t = 0; t < report.per_step_linf_gap.size(); ++t) {
    const double bound = t == 0 ? report.base_gap_bound
                                : report.per_step_linf_gap.front();
    out << (t + 1) << ',' << report.per_step_linf_gap[t] << ',' << bound
        << ',' << report.score_gaps[t] << "\n";
  }
  log << "base gap bound eta(4 rho + 2 varsigma) = " << report.base_gap_bound
      << "\n";
  log << (report.violated ? "VIOLATED" : "within bounds") << "\n";
  return report.violated ? kInvariantViolation : kOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream* plot,
              std::ostream& log) {
  const std::vector<UtilityGridPoint> grid = parse_grid(cfg.grid);
  std::vector<std::uint64_t> seeds;
  for (int i = 0; i < cfg.seeds; ++i) {
    seeds.push_back(cfg.seed + static_cast<std::uint64_t>(i));
  }
  SweepProfile profile;
  profile.epsilon = cfg.epsilon;
  profile.delta = cfg.delta;
  profile.beta = cfg.beta;
  profile.sample_std = cfg.sample_std;
  profile.noise_constant = cfg.noise_constant;

  std::vector<Pipeline> pipelines;
  if (cfg.pipeline == "all") {
    pipelines = {Pipeline::kRobust, Pipeline::kNaiveBaseline,
                 Pipeline::kNonPrivate};
  } else if (cfg.pipeline == "robust") {
    pipelines = {Pipeline::kRobust};
  } else if (cfg.pipeline == "naive-baseline") {
    pipelines = {Pipeline::kNaiveBaseline};
  } else if (cfg.pipeline == "non-private") {
    pipelines = {Pipeline::kNonPrivate};
  } else {
    throw std::runtime_error("unknown pipeline '" + cfg.pipeline + "'");
  }

  std::vector<UtilityRow> rows;
  for (Pipeline p : pipelines) {
    const auto part = run_utility_experiment(grid, cfg.d, seeds, p, profile);
    rows.insert(rows.end(), part.begin(), part.end());
  }

  if (cfg.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const UtilityRow& row : rows) {
      j.push_back({{"nm", static_cast<long long>(row.n) * row.m},
                   {"n", row.n},
                   {"m", row.m},
                   {"pipeline", pipeline_name(row.pipeline)},
                   {"seed", row.seed},
                   {"excess_risk", row.excess_risk},
                   {"feasible", row.feasible},
                   {"passed", row.passed}});
    }
    out << j.dump(2) << "\n";
  } else {
    write_utility_csv(out, rows);
  }
  if (plot != nullptr) {
    *plot << "set datafile separator ','\n"
          << "set logscale xy\n"
          << "set xlabel 'n*m'\n"
          << "set ylabel 'excess risk'\n"
          << "plot '" << (cfg.output.empty() ? "sweep.csv" : cfg.output)
          << "' every ::1 using 1:6 with points title 'per-seed risk'\n";
  }
  log << rows.size() << " rows emitted\n";
  return kOk;
}

int cmd_counterexample(const RunConfig& cfg, std::ostream& out) {
  if (cfg.alpha <= 0.0 || cfg.alpha > 0.1) {
    throw std::runtime_error("alpha must be in (0, 0.1]");
  }
  const CounterexampleResult c = counterexample_geometric_median(cfg.alpha);
  if (cfg.format == "json") {
    const nlohmann::json j = {
        {"alpha", cfg.alpha},
        {"geometric_median_p", {c.median_p[0], c.median_p[1]}},
        {"geometric_median_p_prime",
         {c.median_p_prime[0], c.median_p_prime[1]}},
        {"l2_shift", c.l2_shift},
        {"coordinate_median_linf_shift", c.coord_median_shift}};
    out << j.dump(2) << "\n";
  } else {
    out << "alpha = " << cfg.alpha << "\n";
    out << "geometric median of P  = (" << c.median_p[0] << ", "
        << c.median_p[1] << ")\n";
    out << "geometric median of P' = (" << c.median_p_prime[0] << ", "
        << c.median_p_prime[1] << ")\n";
    out << "l2 shift = " << c.l2_shift << "\n";
    out << "coordinate-wise median linf shift = " << c.coord_median_shift
        << "\n";
  }
  return kOk;
}

int cmd_certify(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  const std::vector<CheckResult> results = run_certification_suite(cfg.seed);
  bool all_passed = true;
  for (const CheckResult& r : results) {
    log << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) log << "  (" << r.detail << ")";
    log << "\n";
    all_passed = all_passed && r.passed;
  }
  if (cfg.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const CheckResult& r : results) {
      j.push_back({{"check", r.name},
                   {"passed", r.passed},
                   {"trials", r.trials},
                   {"violations", r.violations},
                   {"worst", r.worst},
                   {"detail", r.detail}});
    }
    out << j.dump(2) << "\n";
  } else {
    write_certification_csv(out, results);
  }
  return all_passed ? kOk : kInvariantViolation;
}

}  // namespace dpsco::cli
