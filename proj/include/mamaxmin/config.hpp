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
#include <string>
#include <vector>

#include "mamaxmin/baselines.hpp"
#include "mamaxmin/channel.hpp"
#include "mamaxmin/pso.hpp"

namespace mamaxmin {

enum class OutputFormat { kCsv, kJson };

OutputFormat format_from_tag(const std::string& tag);  ///< "csv" | "json"

/// Experiment orchestration settings (everything outside the physics and the
/// swarm parameters).
struct ExperimentSettings {
  std::vector<Scheme> schemes = {Scheme::kMa, Scheme::kFpa};
  std::string sweep_param = "none";   ///< none | M | K | L | A_over_lambda | pmax_dbm | mu | delta
  std::vector<double> sweep_values;   ///< empty means the base configuration only
  int trials = 100;
  std::uint64_t seed = 1;
  std::string out_path = "results.csv";
  OutputFormat format = OutputFormat::kCsv;
  int workers = 0;            ///< 0 = MA_MAXMIN_WORKERS env or hardware concurrency
  bool record_timing = true;  ///< measure wall time per scheme run; off writes 0
  int aps_max_cycles = 10;

  void validate() const;  ///< throws ConfigError
};

/// Full experiment description: physics, swarm search, orchestration.
struct ExperimentSpec {
  ScenarioConfig scenario;
  PsoParams pso;
  ExperimentSettings run;
};

/// Full-size profile matching the published simulation parameters
/// (16 antennas, 12 users, 10 paths, 200 particles, 300 iterations,
/// 1000 trials).  Hours of compute.
ExperimentSpec table1_profile();

/// Scaled-down profile preserving the qualitative trends in minutes:
/// 6 antennas, 4 users, 6 paths, 30 particles, 80 iterations, 100 trials.
ExperimentSpec desk_profile();

ExperimentSpec profile_by_name(const std::string& name);  ///< "table1" | "desk"

/// Overlay a key = value config file (with [scenario] / [pso] / [experiment]
/// sections) onto a spec.  Unknown sections or keys raise ConfigError; a
/// missing file raises IoError.
void apply_config_file(ExperimentSpec& spec, const std::string& path);

/// Same as apply_config_file but parsing from a string (used by tests).
void apply_config_text(ExperimentSpec& spec, const std::string& text);

} // namespace mamaxmin
