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

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mamaxmin/config.hpp"

namespace mamaxmin {

/// One scheme run on one scenario realization.
struct TrialRecord {
  std::string scheme;
  std::string sweep_param;
  double sweep_value = 0.0;
  int trial = 0;
  std::uint64_t seed = 0;
  double min_rate = 0.0;  ///< bps/Hz
  int iterations = 0;     ///< inner-solver alternations of the reported solution
  int violations = 0;     ///< spacing violations of the reported placement
  double wall_ms = 0.0;
};

/// Scenario drawn for a given trial index; identical for every scheme and
/// every sweep value of the experiment (only the experiment seed and the
/// trial index enter the stream identity).
std::vector<UserChannelParams> trial_scenario(const ExperimentSpec& spec,
                                              const ScenarioConfig& cfg, int trial);

/// Copy of the base scenario with one swept parameter replaced.
ScenarioConfig scenario_with(const ScenarioConfig& base, const std::string& param, double value);

/// Run schemes x sweep values x trials, every scheme consuming the identical
/// channel realization of its (value, trial) cell.  Records come back sorted
/// by (scheme order, sweep value order, trial); the result is byte-for-byte
/// independent of the worker count.
std::vector<TrialRecord> run_experiment(const ExperimentSpec& spec);

/// Channel-knowledge robustness protocol: positions are optimized on the
/// perturbed (estimated) channel knowledge, then re-evaluated on the actual
/// one.  Exactly one of the axes mu / delta must be swept.
std::vector<TrialRecord> run_fri_robustness(const ExperimentSpec& spec);

/// Per-iteration state of the position search on a single scenario.
struct ConvergencePoint {
  int t = 0;
  double fitness = 0.0;
  double min_rate = 0.0;
  int violations = 0;
  double signal_over_noise = 0.0;        ///< mean over users of p_k g(k,k) / noise_k
  double interference_over_noise = 0.0;  ///< mean over users of sum_{i!=k} p_i g(k,i) / noise_k
};

/// Trace the swarm search on one scenario (trial 0 of the seed), reporting
/// the global-best rate, violation count and post-combining signal and
/// interference levels after every iteration.  The trace has
/// pso.max_iterations + 1 points including initialization.
std::vector<ConvergencePoint> run_convergence(const ExperimentSpec& spec);

/// Channel power gain of a single antenna placed at each point of a
/// resolution x resolution grid over the region, for every user of one
/// scenario realization.
struct HeatmapPoint {
  int user = 0;
  double x_m = 0.0;
  double y_m = 0.0;
  double gain_db = 0.0;
};
std::vector<HeatmapPoint> heatmap_points(const ExperimentSpec& spec, int resolution);

std::string records_to_csv(const std::vector<TrialRecord>& records);
std::string records_to_json(const std::vector<TrialRecord>& records);
std::string convergence_to_csv(const std::vector<ConvergencePoint>& points);
std::string heatmap_to_csv(const std::vector<HeatmapPoint>& points);

/// Serialize records to path in the requested format.  Throws IoError with
/// the path on failure.
void emit_results(const std::vector<TrialRecord>& records, const std::string& path,
                  OutputFormat format);

void write_text_file(const std::string& path, const std::string& content);

/// Parse records back from the JSON emitted by records_to_json.
std::vector<TrialRecord> records_from_json(const std::string& text);

/// Run fn(0..count-1) on up to `workers` threads; each index is processed
/// exactly once and exceptions are rethrown on the caller.  workers <= 1
/// degenerates to a plain loop.
void parallel_for(int count, int workers, const std::function<void(int)>& fn);

/// Worker count resolution: explicit setting, else MA_MAXMIN_WORKERS
/// environment variable, else hardware concurrency.
int resolve_workers(int requested);

} // namespace mamaxmin
