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

#include "mamaxmin/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "mamaxmin/errors.hpp"

namespace mamaxmin {

namespace {

const std::vector<std::string> kSweepAxes = {"none", "M",         "K",  "L",
                                             "A_over_lambda", "pmax_dbm", "mu", "delta"};

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> items;
  std::stringstream stream(s);
  std::string item;
  while (std::getline(stream, item, ',')) {
    item = trim(item);
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double parsed = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing characters");
    return parsed;
  } catch (const std::exception&) {
    throw ConfigError("config: bad numeric value '" + value + "' for key " + key);
  }
}

int parse_int(const std::string& key, const std::string& value) {
  const double parsed = parse_double(key, value);
  const int rounded = static_cast<int>(parsed);
  if (parsed != rounded) throw ConfigError("config: key " + key + " expects an integer");
  return rounded;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const std::uint64_t parsed = std::stoull(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing characters");
    return parsed;
  } catch (const std::exception&) {
    throw ConfigError("config: bad unsigned value '" + value + "' for key " + key);
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "on" || value == "1") return true;
  if (value == "false" || value == "off" || value == "0") return false;
  throw ConfigError("config: bad boolean value '" + value + "' for key " + key);
}

void apply_scenario_key(ScenarioConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "M") cfg.antennas = parse_int(key, value);
  else if (key == "K") cfg.users = parse_int(key, value);
  else if (key == "L") cfg.paths = parse_int(key, value);
  else if (key == "lambda_m") cfg.lambda_m = parse_double(key, value);
  else if (key == "A_over_lambda") cfg.region_over_lambda = parse_double(key, value);
  else if (key == "D_over_lambda") cfg.min_dist_over_lambda = parse_double(key, value);
  else if (key == "rho_db") cfg.ref_gain_db = parse_double(key, value);
  else if (key == "alpha") cfg.pathloss_exp = parse_double(key, value);
  else if (key == "sigma2_dbm") cfg.noise_dbm = parse_double(key, value);
  else if (key == "pmax_dbm") cfg.pmax_dbm = parse_double(key, value);
  else if (key == "dmin_m") cfg.dmin_m = parse_double(key, value);
  else if (key == "dmax_m") cfg.dmax_m = parse_double(key, value);
  else if (key == "epsilon") cfg.bisection_tol = parse_double(key, value);
  else if (key == "xi") cfg.alternation_tol = parse_double(key, value);
  else if (key == "bcd_max_iter") cfg.max_alternations = parse_int(key, value);
  else throw ConfigError("config: unknown [scenario] key '" + key + "'");
}

void apply_pso_key(PsoParams& pso, const std::string& key, const std::string& value) {
  if (key == "N") pso.swarm_size = parse_int(key, value);
  else if (key == "T") pso.max_iterations = parse_int(key, value);
  else if (key == "c1") pso.c1 = parse_double(key, value);
  else if (key == "c2") pso.c2 = parse_double(key, value);
  else if (key == "omega_min") pso.omega_min = parse_double(key, value);
  else if (key == "omega_max") pso.omega_max = parse_double(key, value);
  else if (key == "tau") pso.penalty_weight = parse_double(key, value);
  else if (key == "velocity_init_scale") pso.velocity_init_scale = parse_double(key, value);
  else if (key == "per_coordinate_random") pso.per_coordinate_random = parse_bool(key, value);
  else if (key == "synchronous") pso.synchronous = parse_bool(key, value);
  else throw ConfigError("config: unknown [pso] key '" + key + "'");
}

void apply_experiment_key(ExperimentSettings& run, const std::string& key,
                          const std::string& value) {
  if (key == "schemes") {
    run.schemes.clear();
    for (const auto& tag : split_list(value)) run.schemes.push_back(scheme_from_tag(tag));
    if (run.schemes.empty()) throw ConfigError("config: schemes list is empty");
  } else if (key == "sweep_param") {
    run.sweep_param = value;
  } else if (key == "sweep_values") {
    run.sweep_values.clear();
    for (const auto& item : split_list(value))
      run.sweep_values.push_back(parse_double(key, item));
  } else if (key == "trials") {
    run.trials = parse_int(key, value);
  } else if (key == "seed") {
    run.seed = parse_u64(key, value);
  } else if (key == "out") {
    run.out_path = value;
  } else if (key == "format") {
    run.format = format_from_tag(value);
  } else if (key == "workers") {
    run.workers = parse_int(key, value);
  } else if (key == "timing") {
    run.record_timing = parse_bool(key, value);
  } else if (key == "aps_max_cycles") {
    run.aps_max_cycles = parse_int(key, value);
  } else {
    throw ConfigError("config: unknown [experiment] key '" + key + "'");
  }
}

} // namespace

OutputFormat format_from_tag(const std::string& tag) {
  if (tag == "csv") return OutputFormat::kCsv;
  if (tag == "json") return OutputFormat::kJson;
  throw ConfigError("unknown output format '" + tag + "' (expected csv or json)");
}

void ExperimentSettings::validate() const {
  if (schemes.empty()) throw ConfigError("experiment: schemes list is empty");
  if (trials < 1) throw ConfigError("experiment: trials must be >= 1");
  if (std::find(kSweepAxes.begin(), kSweepAxes.end(), sweep_param) == kSweepAxes.end())
    throw ConfigError("experiment: unsupported sweep parameter '" + sweep_param + "'");
  if (sweep_param != "none" && sweep_values.empty())
    throw ConfigError("experiment: sweep_values must be nonempty for parameter " + sweep_param);
  if (workers < 0) throw ConfigError("experiment: workers must be >= 0");
  if (aps_max_cycles < 1) throw ConfigError("experiment: aps_max_cycles must be >= 1");
}

ExperimentSpec table1_profile() {
  ExperimentSpec spec;  // struct defaults are the published parameter table
  spec.run.trials = 1000;
  return spec;
}

ExperimentSpec desk_profile() {
  ExperimentSpec spec;
  spec.scenario.antennas = 6;
  spec.scenario.users = 4;
  spec.scenario.paths = 6;
  spec.pso.swarm_size = 30;
  spec.pso.max_iterations = 80;
  spec.run.trials = 100;
  return spec;
}

ExperimentSpec profile_by_name(const std::string& name) {
  if (name == "table1") return table1_profile();
  if (name == "desk") return desk_profile();
  throw ConfigError("unknown profile '" + name + "' (expected table1 or desk)");
}

void apply_config_text(ExperimentSpec& spec, const std::string& text) {
  std::stringstream stream(text);
  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    const auto comment = line.find('#');
    if (comment != std::string::npos) line = line.substr(0, comment);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']') {
      section = trim(line.substr(1, line.size() - 2));
      if (section != "scenario" && section != "pso" && section != "experiment")
        throw ConfigError("config: unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config: line " + std::to_string(line_no) + " is not 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (section == "scenario") apply_scenario_key(spec.scenario, key, value);
    else if (section == "pso") apply_pso_key(spec.pso, key, value);
    else if (section == "experiment") apply_experiment_key(spec.run, key, value);
    else throw ConfigError("config: key '" + key + "' appears before any section header");
  }
}

void apply_config_file(ExperimentSpec& spec, const std::string& path) {
  std::ifstream file(path);
  if (!file) throw IoError("cannot open config file: " + path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  apply_config_text(spec, buffer.str());
}

} // namespace mamaxmin
