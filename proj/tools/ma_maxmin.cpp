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

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mamaxmin/errors.hpp"
#include "mamaxmin/harness.hpp"

namespace {

using namespace mamaxmin;

struct CliOptions {
  std::string profile = "desk";
  std::string config_path;
  std::uint64_t seed = 0;
  int trials = 0;
  std::string out_path;
  std::string format;
  std::string schemes;
  int workers = -1;
  std::string timing;
  std::string sweep_param;
  std::vector<double> sweep_values;
  int heatmap_resolution = 61;
};

ExperimentSpec build_spec(const CLI::App& app, const CliOptions& opts) {
  ExperimentSpec spec = profile_by_name(opts.profile);
  if (!opts.config_path.empty()) apply_config_file(spec, opts.config_path);

  if (app.count("--seed") > 0) spec.run.seed = opts.seed;
  if (app.count("--trials") > 0) spec.run.trials = opts.trials;
  if (app.count("--out") > 0) spec.run.out_path = opts.out_path;
  if (app.count("--format") > 0) spec.run.format = format_from_tag(opts.format);
  if (app.count("--workers") > 0) spec.run.workers = opts.workers;
  if (app.count("--timing") > 0) {
    if (opts.timing == "on") spec.run.record_timing = true;
    else if (opts.timing == "off") spec.run.record_timing = false;
    else throw ConfigError("--timing expects on or off");
  }
  if (app.count("--schemes") > 0) {
    spec.run.schemes.clear();
    std::stringstream stream(opts.schemes);
    std::string tag;
    while (std::getline(stream, tag, ','))
      if (!tag.empty()) spec.run.schemes.push_back(scheme_from_tag(tag));
  }
  return spec;
}

int dispatch(const std::string& command, const CLI::App& app, const CliOptions& opts) {
  ExperimentSpec spec = build_spec(app, opts);

  if (command == "run") {
    spec.run.sweep_param = "none";
    spec.run.sweep_values.clear();
    emit_results(run_experiment(spec), spec.run.out_path, spec.run.format);
  } else if (command == "sweep") {
    if (!opts.sweep_param.empty()) spec.run.sweep_param = opts.sweep_param;
    if (!opts.sweep_values.empty()) spec.run.sweep_values = opts.sweep_values;
    if (spec.run.sweep_param == "none" || spec.run.sweep_param == "mu" ||
        spec.run.sweep_param == "delta")
      throw ConfigError("sweep: --param must be one of M, K, L, A_over_lambda, pmax_dbm");
    emit_results(run_experiment(spec), spec.run.out_path, spec.run.format);
  } else if (command == "fri") {
    if (!opts.sweep_param.empty()) spec.run.sweep_param = opts.sweep_param;
    if (!opts.sweep_values.empty()) spec.run.sweep_values = opts.sweep_values;
    if (spec.run.sweep_param != "mu" && spec.run.sweep_param != "delta")
      throw ConfigError("fri: --param must be mu or delta");
    emit_results(run_fri_robustness(spec), spec.run.out_path, spec.run.format);
  } else if (command == "convergence") {
    write_text_file(spec.run.out_path, convergence_to_csv(run_convergence(spec)));
  } else if (command == "heatmap") {
    write_text_file(spec.run.out_path,
                    heatmap_to_csv(heatmap_points(spec, opts.heatmap_resolution)));
  }
  std::printf("wrote %s\n", spec.run.out_path.c_str());
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Movable-antenna multiuser uplink max-min rate experiments"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand name

  CliOptions opts;
  app.add_option("--profile", opts.profile, "Parameter profile: desk or table1")
      ->check(CLI::IsMember({"desk", "table1"}));
  app.add_option("--config", opts.config_path, "Config file overlaying the profile");
  app.add_option("--seed", opts.seed, "Experiment seed");
  app.add_option("--trials", opts.trials, "Scenario realizations per sweep point");
  app.add_option("--out", opts.out_path, "Output file path");
  app.add_option("--format", opts.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--schemes", opts.schemes, "Comma list from MA,FPA,APS,MPZF");
  app.add_option("--workers", opts.workers,
                 "Worker threads (default: MA_MAXMIN_WORKERS or hardware)");
  app.add_option("--timing", opts.timing, "Record wall time per run: on or off")
      ->check(CLI::IsMember({"on", "off"}));

  CLI::App* run = app.add_subcommand("run", "Single experiment at the base configuration");
  CLI::App* sweep = app.add_subcommand("sweep", "Sweep a scenario parameter");
  sweep->add_option("--param", opts.sweep_param, "M, K, L, A_over_lambda or pmax_dbm");
  sweep->add_option("--values", opts.sweep_values, "Sweep values")->delimiter(',');
  CLI::App* fri = app.add_subcommand("fri", "Channel-knowledge robustness sweep");
  fri->add_option("--param", opts.sweep_param, "mu or delta");
  fri->add_option("--values", opts.sweep_values, "Error magnitudes")->delimiter(',');
  CLI::App* convergence =
      app.add_subcommand("convergence", "Per-iteration search trace on one scenario");
  CLI::App* heatmap =
      app.add_subcommand("heatmap", "Per-user channel gain over the region for one scenario");
  heatmap->add_option("--grid", opts.heatmap_resolution, "Grid resolution per axis");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  const std::string command = run->parsed()           ? "run"
                              : sweep->parsed()       ? "sweep"
                              : fri->parsed()         ? "fri"
                              : convergence->parsed() ? "convergence"
                                                      : "heatmap";
  try {
    return dispatch(command, app, opts);
  } catch (const IoError& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return 2;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
