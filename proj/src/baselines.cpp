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

#include "mamaxmin/baselines.hpp"

#include <cmath>

#include "mamaxmin/errors.hpp"

namespace mamaxmin {

std::string scheme_tag(Scheme scheme) {
  switch (scheme) {
    case Scheme::kMa: return "MA";
    case Scheme::kFpa: return "FPA";
    case Scheme::kAps: return "APS";
    case Scheme::kMpzf: return "MPZF";
  }
  return "?";
}

Scheme scheme_from_tag(const std::string& tag) {
  if (tag == "MA") return Scheme::kMa;
  if (tag == "FPA") return Scheme::kFpa;
  if (tag == "APS") return Scheme::kAps;
  if (tag == "MPZF") return Scheme::kMpzf;
  throw ConfigError("unknown scheme '" + tag + "' (expected MA, FPA, APS or MPZF)");
}

Apv fpa_layout(int antennas, double lambda_m, double region_m) {
  if (antennas < 1) throw std::invalid_argument("fpa_layout: antenna count must be >= 1");
  const double spacing = lambda_m / 2.0;
  const int rows = static_cast<int>(std::floor(std::sqrt(static_cast<double>(antennas))));
  const int cols = (antennas + rows - 1) / rows;
  const double width = (cols - 1) * spacing;
  const double height = (rows - 1) * spacing;
  if (width > region_m + 1e-12 || height > region_m + 1e-12)
    throw RegionTooSmall("fpa_layout: half-wavelength grid of " + std::to_string(antennas) +
                         " antennas exceeds the region side " + std::to_string(region_m));

  RVector coords(2 * antennas);
  for (int m = 0; m < antennas; ++m) {
    const int row = m / cols;
    const int col = m % cols;
    coords[2 * m] = (col - (cols - 1) / 2.0) * spacing;
    coords[2 * m + 1] = (row - (rows - 1) / 2.0) * spacing;
  }
  return Apv(std::move(coords));
}

InnerSolution fpa_evaluate(const std::vector<UserChannelParams>& users,
                           const ScenarioConfig& cfg) {
  return bcd_solve(fpa_layout(cfg.antennas, cfg.lambda_m, cfg.region_m()), users, cfg);
}

namespace {

// Rate improvements below this are treated as ties.
constexpr double kApsTieTol = 1e-12;

std::vector<Eigen::Vector2d> region_grid(double region_m, double spacing) {
  const double half = region_m / 2.0;
  const int per_axis = static_cast<int>(std::floor(region_m / spacing + 1e-9)) + 1;
  std::vector<Eigen::Vector2d> points;
  points.reserve(static_cast<std::size_t>(per_axis) * per_axis);
  for (int iy = 0; iy < per_axis; ++iy)
    for (int ix = 0; ix < per_axis; ++ix)
      points.emplace_back(-half + ix * spacing, -half + iy * spacing);
  return points;
}

bool keeps_min_distance(const Apv& apv, int moved, const Eigen::Vector2d& candidate,
                        double min_dist) {
  for (int i = 0; i < apv.count(); ++i) {
    if (i == moved) continue;
    const double dx = candidate.x() - apv.x(i);
    const double dy = candidate.y() - apv.y(i);
    if (std::sqrt(dx * dx + dy * dy) < min_dist) return false;
  }
  return true;
}

} // namespace

ApsResult aps_optimize(const std::vector<UserChannelParams>& users, const ScenarioConfig& cfg,
                       const ApsOptions& options) {
  ApsResult result;
  result.apv = fpa_layout(cfg.antennas, cfg.lambda_m, cfg.region_m());
  result.solution = bcd_solve(result.apv, users, cfg);

  const auto grid = region_grid(cfg.region_m(), cfg.lambda_m / 2.0);
  const double min_dist = cfg.min_dist_m();

  for (int cycle = 0; cycle < options.max_cycles; ++cycle) {
    bool moved = false;
    ++result.cycles;
    for (int m = 0; m < cfg.antennas; ++m) {
      Eigen::Vector2d best_point(result.apv.x(m), result.apv.y(m));
      InnerSolution best_solution = result.solution;
      bool improved = false;
      for (const auto& point : grid) {
        if (!keeps_min_distance(result.apv, m, point, min_dist)) continue;
        Apv candidate = result.apv;
        candidate.coords[2 * m] = point.x();
        candidate.coords[2 * m + 1] = point.y();
        InnerSolution solution = bcd_solve(candidate, users, cfg);
        // Strict improvement only, so ties keep the current position; the
        // margin keeps round-off-level differences from counting as moves.
        if (solution.min_rate > best_solution.min_rate + kApsTieTol) {
          best_solution = std::move(solution);
          best_point = point;
          improved = true;
        }
      }
      if (improved) {
        result.apv.coords[2 * m] = best_point.x();
        result.apv.coords[2 * m + 1] = best_point.y();
        result.solution = std::move(best_solution);
        moved = true;
      }
    }
    if (!moved) break;
  }
  return result;
}

InnerSolution mpzf_evaluate(const Apv& apv, const std::vector<UserChannelParams>& users,
                            const ScenarioConfig& cfg) {
  const double noise = cfg.noise_w();
  const CMatrix channel = channel_matrix(apv, users, cfg.lambda_m);

  InnerSolution solution;
  solution.power = RVector::Constant(cfg.users, cfg.pmax_w());
  solution.iterations = 1;
  try {
    solution.combiner = zf_combiner(channel);
    solution.report = sinr_report(solution.combiner, channel, solution.power, noise);
  } catch (const RankDeficient&) {
    solution.combiner = {CMatrix::Zero(channel.rows(), channel.cols()), CombinerKind::kZf};
    solution.report.sinr = RVector::Zero(cfg.users);
    solution.report.rates = RVector::Zero(cfg.users);
    solution.report.min_rate = 0.0;
  }
  solution.min_rate = solution.report.min_rate;
  solution.trace = {solution.min_rate};
  return solution;
}

MpzfSolution mpzf_optimize(const std::vector<UserChannelParams>& users,
                           const ScenarioConfig& cfg, const PsoParams& params, RngStream& rng) {
  const FitnessFn evaluate = [&](const Apv& apv) {
    FitnessValue fit;
    fit.violations = violation_pair_count(apv, cfg.min_dist_m());
    fit.rate = mpzf_evaluate(apv, users, cfg).min_rate;
    fit.value = fit.rate - params.penalty_weight * fit.violations;
    return fit;
  };
  PsoResult search = optimize_apv(params, cfg, rng, evaluate);

  MpzfSolution out;
  out.apv = search.best;
  out.solution = mpzf_evaluate(search.best, users, cfg);
  out.history = std::move(search.history);
  return out;
}

} // namespace mamaxmin
