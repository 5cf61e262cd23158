// ma-maxmin: movable-antenna base station simulation and max-min rate optimization
// Copyright (C) 2026 the ma-maxmin authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "mamaxmin/harness.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "mamaxmin/errors.hpp"

namespace mamaxmin {

namespace {

// Stream-identity tags; scenario and knowledge-error streams deliberately
// exclude the sweep value so trials stay paired across a sweep.
constexpr std::uint64_t kScenarioTag = 0x7363656eULL;
constexpr std::uint64_t kPsoTag = 0x70736f00ULL;
constexpr std::uint64_t kFriTag = 0x66726900ULL;

std::string format_sig9(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.9g", value);
  return buffer;
}

double round_sig9(double value) { return std::stod(format_sig9(value)); }

struct SchemeOutcome {
  double min_rate = 0.0;
  int iterations = 0;
  int violations = 0;
};

RngStream pso_stream(const ExperimentSpec& spec, int trial, int scheme_index) {
  return RngStream(spec.run.seed, 0).split(kPsoTag).split(trial).split(scheme_index);
}

SchemeOutcome run_scheme(Scheme scheme, const ExperimentSpec& spec, const ScenarioConfig& cfg,
                         const std::vector<UserChannelParams>& users, int trial,
                         int scheme_index) {
  SchemeOutcome outcome;
  const double min_dist = cfg.min_dist_m();
  switch (scheme) {
    case Scheme::kMa: {
      RngStream rng = pso_stream(spec, trial, scheme_index);
      PsoSolution sol = pso_optimize(users, cfg, spec.pso, rng);
      outcome = {sol.solution.min_rate, sol.solution.iterations,
                 violation_pair_count(sol.apv, min_dist)};
      break;
    }
    case Scheme::kFpa: {
      InnerSolution sol = fpa_evaluate(users, cfg);
      const Apv layout = fpa_layout(cfg.antennas, cfg.lambda_m, cfg.region_m());
      outcome = {sol.min_rate, sol.iterations, violation_pair_count(layout, min_dist)};
      break;
    }
    case Scheme::kAps: {
      ApsResult sol = aps_optimize(users, cfg, {spec.run.aps_max_cycles});
      outcome = {sol.solution.min_rate, sol.solution.iterations,
                 violation_pair_count(sol.apv, min_dist)};
      break;
    }
    case Scheme::kMpzf: {
      RngStream rng = pso_stream(spec, trial, scheme_index);
      MpzfSolution sol = mpzf_optimize(users, cfg, spec.pso, rng);
      outcome = {sol.solution.min_rate, sol.solution.iterations,
                 violation_pair_count(sol.apv, min_dist)};
      break;
    }
  }
  return outcome;
}

// Estimated-knowledge protocol: optimize positions on perturbed parameters,
// evaluate the resulting placement on the actual ones with the scheme's own
// receiver policy.
SchemeOutcome run_scheme_fri(Scheme scheme, const ExperimentSpec& spec,
                             const ScenarioConfig& cfg,
                             const std::vector<UserChannelParams>& actual,
                             const std::vector<UserChannelParams>& estimated, int trial,
                             int scheme_index) {
  SchemeOutcome outcome;
  const double min_dist = cfg.min_dist_m();
  switch (scheme) {
    case Scheme::kMa: {
      RngStream rng = pso_stream(spec, trial, scheme_index);
      PsoSolution search = pso_optimize(estimated, cfg, spec.pso, rng);
      InnerSolution sol = bcd_solve(search.apv, actual, cfg);
      outcome = {sol.min_rate, sol.iterations, violation_pair_count(search.apv, min_dist)};
      break;
    }
    case Scheme::kFpa: {
      // Fixed grid: estimates play no role in the placement.
      InnerSolution sol = fpa_evaluate(actual, cfg);
      const Apv layout = fpa_layout(cfg.antennas, cfg.lambda_m, cfg.region_m());
      outcome = {sol.min_rate, sol.iterations, violation_pair_count(layout, min_dist)};
      break;
    }
    case Scheme::kAps: {
      ApsResult search = aps_optimize(estimated, cfg, {spec.run.aps_max_cycles});
      InnerSolution sol = bcd_solve(search.apv, actual, cfg);
      outcome = {sol.min_rate, sol.iterations, violation_pair_count(search.apv, min_dist)};
      break;
    }
    case Scheme::kMpzf: {
      RngStream rng = pso_stream(spec, trial, scheme_index);
      MpzfSolution search = mpzf_optimize(estimated, cfg, spec.pso, rng);
      InnerSolution sol = mpzf_evaluate(search.apv, actual, cfg);
      outcome = {sol.min_rate, sol.iterations, violation_pair_count(search.apv, min_dist)};
      break;
    }
  }
  return outcome;
}

void warn_if_penalty_too_small(const std::vector<TrialRecord>& records, double penalty) {
  for (const auto& record : records) {
    if (record.min_rate > penalty) {
      std::fprintf(stderr,
                   "warning: observed rate %.3f bps/Hz exceeds penalty parameter %.3f; "
                   "violating placements may outscore feasible ones\n",
                   record.min_rate, penalty);
      return;
    }
  }
}

using CellRunner = std::function<std::vector<TrialRecord>(int value_index, int trial)>;

// Shared fan-out for experiment grids: tasks are (sweep value, trial) cells,
// records are collected per cell and flattened in (scheme, value, trial)
// order afterwards so the output never depends on scheduling.
std::vector<TrialRecord> run_grid(const ExperimentSpec& spec,
                                  const std::vector<double>& values, const CellRunner& cell) {
  const int trials = spec.run.trials;
  const int n_values = static_cast<int>(values.size());
  const int n_schemes = static_cast<int>(spec.run.schemes.size());
  std::vector<std::vector<TrialRecord>> cells(static_cast<std::size_t>(n_values) * trials);

  parallel_for(n_values * trials, resolve_workers(spec.run.workers), [&](int task) {
    const int value_index = task / trials;
    const int trial = task % trials;
    cells[task] = cell(value_index, trial);
  });

  std::vector<TrialRecord> records;
  records.reserve(cells.size() * n_schemes);
  for (int s = 0; s < n_schemes; ++s)
    for (int v = 0; v < n_values; ++v)
      for (int trial = 0; trial < trials; ++trial)
        records.push_back(cells[static_cast<std::size_t>(v) * trials + trial][s]);

  warn_if_penalty_too_small(records, spec.pso.penalty_weight);
  return records;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

} // namespace

std::vector<UserChannelParams> trial_scenario(const ExperimentSpec& spec,
                                              const ScenarioConfig& cfg, int trial) {
  RngStream rng = RngStream(spec.run.seed, 0).split(kScenarioTag).split(trial);
  return generate_scenario(cfg, rng);
}

ScenarioConfig scenario_with(const ScenarioConfig& base, const std::string& param,
                             double value) {
  ScenarioConfig cfg = base;
  if (param == "none") return cfg;
  if (param == "M") cfg.antennas = static_cast<int>(value);
  else if (param == "K") cfg.users = static_cast<int>(value);
  else if (param == "L") cfg.paths = static_cast<int>(value);
  else if (param == "A_over_lambda") cfg.region_over_lambda = value;
  else if (param == "pmax_dbm") cfg.pmax_dbm = value;
  else throw ConfigError("unsupported scenario sweep parameter '" + param + "'");
  return cfg;
}

std::vector<TrialRecord> run_experiment(const ExperimentSpec& spec) {
  spec.run.validate();
  spec.pso.validate();
  if (spec.run.sweep_param == "mu" || spec.run.sweep_param == "delta")
    return run_fri_robustness(spec);

  const std::vector<double> values =
      spec.run.sweep_param == "none" ? std::vector<double>{0.0} : spec.run.sweep_values;

  // Validate every swept configuration before any work starts.
  std::vector<ScenarioConfig> configs;
  for (double value : values) {
    ScenarioConfig cfg = scenario_with(spec.scenario, spec.run.sweep_param, value);
    cfg.validate();
    for (Scheme scheme : spec.run.schemes)
      if (scheme == Scheme::kFpa || scheme == Scheme::kAps)
        fpa_layout(cfg.antennas, cfg.lambda_m, cfg.region_m());
    configs.push_back(cfg);
  }

  return run_grid(spec, values, [&](int value_index, int trial) {
    const ScenarioConfig& cfg = configs[value_index];
    const auto users = trial_scenario(spec, cfg, trial);
    std::vector<TrialRecord> cell;
    cell.reserve(spec.run.schemes.size());
    for (std::size_t s = 0; s < spec.run.schemes.size(); ++s) {
      const auto start = std::chrono::steady_clock::now();
      const SchemeOutcome outcome = run_scheme(spec.run.schemes[s], spec, cfg, users, trial,
                                               static_cast<int>(s));
      TrialRecord record;
      record.scheme = scheme_tag(spec.run.schemes[s]);
      record.sweep_param = spec.run.sweep_param;
      record.sweep_value = values[value_index];
      record.trial = trial;
      record.seed = spec.run.seed;
      record.min_rate = outcome.min_rate;
      record.iterations = outcome.iterations;
      record.violations = outcome.violations;
      record.wall_ms = spec.run.record_timing ? elapsed_ms(start) : 0.0;
      cell.push_back(std::move(record));
    }
    return cell;
  });
}

std::vector<TrialRecord> run_fri_robustness(const ExperimentSpec& spec) {
  spec.run.validate();
  spec.pso.validate();
  if (spec.run.sweep_param != "mu" && spec.run.sweep_param != "delta")
    throw ConfigError("run_fri_robustness: sweep parameter must be mu or delta");
  spec.scenario.validate();
  for (Scheme scheme : spec.run.schemes)
    if (scheme == Scheme::kFpa || scheme == Scheme::kAps)
      fpa_layout(spec.scenario.antennas, spec.scenario.lambda_m, spec.scenario.region_m());
  for (double value : spec.run.sweep_values)
    if (value < 0.0) throw ConfigError("run_fri_robustness: error magnitudes must be >= 0");

  return run_grid(spec, spec.run.sweep_values, [&](int value_index, int trial) {
    const ScenarioConfig& cfg = spec.scenario;
    const double value = spec.run.sweep_values[value_index];
    FriErrorModel err;
    if (spec.run.sweep_param == "mu") err.max_aoa_error = value;
    else err.prv_error_var = value;

    const auto actual = trial_scenario(spec, cfg, trial);
    // The error stream depends on the trial only, so the underlying draws
    // are shared across sweep values and trials stay paired.
    RngStream fri_rng = RngStream(spec.run.seed, 0).split(kFriTag).split(trial);
    const auto estimated = perturb_fri(actual, err, fri_rng);

    std::vector<TrialRecord> cell;
    cell.reserve(spec.run.schemes.size());
    for (std::size_t s = 0; s < spec.run.schemes.size(); ++s) {
      const auto start = std::chrono::steady_clock::now();
      const SchemeOutcome outcome = run_scheme_fri(spec.run.schemes[s], spec, cfg, actual,
                                                   estimated, trial, static_cast<int>(s));
      TrialRecord record;
      record.scheme = scheme_tag(spec.run.schemes[s]);
      record.sweep_param = spec.run.sweep_param;
      record.sweep_value = value;
      record.trial = trial;
      record.seed = spec.run.seed;
      record.min_rate = outcome.min_rate;
      record.iterations = outcome.iterations;
      record.violations = outcome.violations;
      record.wall_ms = spec.run.record_timing ? elapsed_ms(start) : 0.0;
      cell.push_back(std::move(record));
    }
    return cell;
  });
}

std::vector<ConvergencePoint> run_convergence(const ExperimentSpec& spec) {
  spec.scenario.validate();
  spec.pso.validate();
  const ScenarioConfig& cfg = spec.scenario;
  const auto users = trial_scenario(spec, cfg, 0);
  const double noise = cfg.noise_w();

  std::vector<ConvergencePoint> points;
  points.reserve(spec.pso.max_iterations + 1);
  double last_best = std::numeric_limits<double>::quiet_NaN();
  double signal = 0.0, interference = 0.0;

  const IterationObserver observer = [&](int t, const SwarmState& state) {
    const FitnessValue& best = state.global_best_fitness;
    if (best.value != last_best) {
      // Global best moved: recompute its solution to report the
      // post-combining signal and interference levels.
      last_best = best.value;
      const Apv apv(state.global_best_position);
      const InnerSolution sol = bcd_solve(apv, users, cfg);
      const CMatrix channel = channel_matrix(apv, users, cfg.lambda_m);
      const SinrCoefficients coeffs = sinr_coefficients(sol.combiner, channel, noise);
      double sig = 0.0, intf = 0.0;
      const int n_users = cfg.users;
      for (int k = 0; k < n_users; ++k) {
        sig += sol.power[k] * coeffs.gain(k, k) / coeffs.noise[k];
        for (int i = 0; i < n_users; ++i)
          if (i != k) intf += sol.power[i] * coeffs.gain(k, i) / coeffs.noise[k];
      }
      signal = sig / n_users;
      interference = intf / n_users;
    }
    points.push_back({t, best.value, best.rate, best.violations, signal, interference});
  };

  RngStream rng = pso_stream(spec, 0, 0);
  pso_optimize(users, cfg, spec.pso, rng, observer);
  return points;
}

std::vector<HeatmapPoint> heatmap_points(const ExperimentSpec& spec, int resolution) {
  if (resolution < 2) throw ConfigError("heatmap: resolution must be >= 2");
  spec.scenario.validate();
  const ScenarioConfig& cfg = spec.scenario;
  const auto users = trial_scenario(spec, cfg, 0);
  const double half = cfg.region_m() / 2.0;
  const double step = cfg.region_m() / (resolution - 1);

  std::vector<HeatmapPoint> points;
  points.reserve(users.size() * resolution * resolution);
  for (std::size_t k = 0; k < users.size(); ++k) {
    for (int iy = 0; iy < resolution; ++iy) {
      for (int ix = 0; ix < resolution; ++ix) {
        const double x = -half + ix * step;
        const double y = -half + iy * step;
        const Complex h = field_response_vector(x, y, users[k], cfg.lambda_m).dot(users[k].path_gains);
        points.push_back({static_cast<int>(k), x, y, 10.0 * std::log10(std::norm(h))});
      }
    }
  }
  return points;
}

std::string records_to_csv(const std::vector<TrialRecord>& records) {
  std::string out = "scheme,sweep_param,sweep_value,trial,seed,min_rate_bps_hz,iterations,"
                    "violations,wall_ms\n";
  for (const auto& r : records) {
    out += r.scheme;
    out += ',';
    out += r.sweep_param;
    out += ',';
    out += format_sig9(r.sweep_value);
    out += ',';
    out += std::to_string(r.trial);
    out += ',';
    out += std::to_string(r.seed);
    out += ',';
    out += format_sig9(r.min_rate);
    out += ',';
    out += std::to_string(r.iterations);
    out += ',';
    out += std::to_string(r.violations);
    out += ',';
    out += format_sig9(r.wall_ms);
    out += '\n';
  }
  return out;
}

std::string records_to_json(const std::vector<TrialRecord>& records) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : records) {
    out.push_back({{"scheme", r.scheme},
                   {"sweep_param", r.sweep_param},
                   {"sweep_value", round_sig9(r.sweep_value)},
                   {"trial", r.trial},
                   {"seed", r.seed},
                   {"min_rate_bps_hz", round_sig9(r.min_rate)},
                   {"iterations", r.iterations},
                   {"violations", r.violations},
                   {"wall_ms", round_sig9(r.wall_ms)}});
  }
  return out.dump(2) + "\n";
}

std::vector<TrialRecord> records_from_json(const std::string& text) {
  const nlohmann::json parsed = nlohmann::json::parse(text);
  std::vector<TrialRecord> records;
  records.reserve(parsed.size());
  for (const auto& item : parsed) {
    TrialRecord r;
    r.scheme = item.at("scheme").get<std::string>();
    r.sweep_param = item.at("sweep_param").get<std::string>();
    r.sweep_value = item.at("sweep_value").get<double>();
    r.trial = item.at("trial").get<int>();
    r.seed = item.at("seed").get<std::uint64_t>();
    r.min_rate = item.at("min_rate_bps_hz").get<double>();
    r.iterations = item.at("iterations").get<int>();
    r.violations = item.at("violations").get<int>();
    r.wall_ms = item.at("wall_ms").get<double>();
    records.push_back(std::move(r));
  }
  return records;
}

std::string convergence_to_csv(const std::vector<ConvergencePoint>& points) {
  std::string out =
      "t,gbest_fitness,gbest_min_rate_bps_hz,violations,signal_over_noise,"
      "interference_over_noise\n";
  for (const auto& p : points) {
    out += std::to_string(p.t);
    out += ',';
    out += format_sig9(p.fitness);
    out += ',';
    out += format_sig9(p.min_rate);
    out += ',';
    out += std::to_string(p.violations);
    out += ',';
    out += format_sig9(p.signal_over_noise);
    out += ',';
    out += format_sig9(p.interference_over_noise);
    out += '\n';
  }
  return out;
}

std::string heatmap_to_csv(const std::vector<HeatmapPoint>& points) {
  std::string out = "user,x_m,y_m,gain_db\n";
  for (const auto& p : points) {
    out += std::to_string(p.user);
    out += ',';
    out += format_sig9(p.x_m);
    out += ',';
    out += format_sig9(p.y_m);
    out += ',';
    out += format_sig9(p.gain_db);
    out += '\n';
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open for writing: " + path);
  file << content;
  if (!file) throw IoError("write failed: " + path);
}

void emit_results(const std::vector<TrialRecord>& records, const std::string& path,
                  OutputFormat format) {
  write_text_file(path, format == OutputFormat::kCsv ? records_to_csv(records)
                                                     : records_to_json(records));
}

void parallel_for(int count, int workers, const std::function<void(int)>& fn) {
  if (count <= 0) return;
  workers = std::min(workers, count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }

  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto body = [&]() {
    while (true) {
      const int i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back(body);
  for (auto& thread : pool) thread.join();
  if (failure) std::rethrow_exception(failure);
}

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("MA_MAXMIN_WORKERS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

} // namespace mamaxmin
