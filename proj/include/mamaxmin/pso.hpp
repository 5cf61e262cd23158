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

#include <functional>
#include <vector>

#include "mamaxmin/inner_loop.hpp"

namespace mamaxmin {

/// Swarm-search parameters.
struct PsoParams {
  int swarm_size = 200;     ///< particles
  int max_iterations = 300;
  double c1 = 1.4;          ///< individual learning factor
  double c2 = 1.4;          ///< global learning factor
  double omega_min = 0.4;   ///< inertia weight at the last iteration
  double omega_max = 0.9;   ///< inertia weight at the first iteration
  double penalty_weight = 10.0;  ///< fitness penalty per spacing violation

  /// Initial velocities are uniform over the region box scaled by this factor.
  /// A quarter-box start explores noticeably better than full-box velocities,
  /// which mostly bounce off the projection walls early on.
  double velocity_init_scale = 0.25;
  /// Draw the two stochastic update factors per coordinate (classic swarm
  /// update) instead of once per particle.  Per-particle scalars confine each
  /// move to the span of three vectors and search markedly worse in higher
  /// dimensions.
  bool per_coordinate_random = true;
  /// Update the swarm against the previous iteration's best position instead
  /// of refreshing it particle-by-particle within the iteration.
  bool synchronous = false;

  void validate() const;  ///< throws ConfigError
};

/// Penalized fitness of one placement.
struct FitnessValue {
  double value = 0.0;  ///< rate minus penalty_weight * violations
  double rate = 0.0;   ///< max-min achievable rate, bps/Hz
  int violations = 0;  ///< antenna pairs closer than the minimum distance
};

struct SwarmState {
  std::vector<RVector> positions;
  std::vector<RVector> velocities;
  std::vector<RVector> best_positions;       ///< per-particle best
  std::vector<FitnessValue> best_fitness;
  RVector global_best_position;
  FitnessValue global_best_fitness;
  int iteration = 0;
};

using FitnessFn = std::function<FitnessValue(const Apv&)>;
/// Invoked after swarm initialization (t = 0) and after every iteration.
using IterationObserver = std::function<void(int t, const SwarmState&)>;

/// Linearly decreasing inertia schedule from omega_max at t = 0 to omega_min
/// at t = max_iterations.
double inertia_weight(int t, int max_iterations, double omega_min, double omega_max);

/// Clamp every coordinate into [-side/2, side/2].
RVector project_into_region(RVector coords, double side_m);

/// Number of unordered antenna pairs strictly closer than min_dist_m.
int violation_pair_count(const Apv& apv, double min_dist_m);

/// Penalized fitness: max-min rate of the inner solver minus
/// penalty_weight per spacing violation.
FitnessValue fitness(const Apv& apv, const std::vector<UserChannelParams>& users,
                     const ScenarioConfig& cfg, double penalty_weight);

/// Random swarm over the region box; per-particle bests start at the initial
/// positions and the global best at their fitness argmax (first index wins
/// ties).
SwarmState init_swarm(const PsoParams& params, const ScenarioConfig& cfg, RngStream& rng,
                      const FitnessFn& evaluate);

/// Velocity and position update for particle n: inertia plus random pulls
/// toward the particle's own best and the global best, then projection into
/// the region box.
void update_particle(SwarmState& state, int n, double omega, const PsoParams& params,
                     double side_m, RngStream& rng);

struct PsoResult {
  Apv best;
  FitnessValue best_fitness;
  std::vector<FitnessValue> history;  ///< global-best fitness per iteration, including init
};

/// Swarm search over antenna placements with an arbitrary fitness function.
PsoResult optimize_apv(const PsoParams& params, const ScenarioConfig& cfg, RngStream& rng,
                       const FitnessFn& evaluate, const IterationObserver& observer = {});

struct PsoSolution {
  Apv apv;
  InnerSolution solution;             ///< inner solver rerun at the best placement
  std::vector<FitnessValue> history;
};

/// Full position optimization: swarm search with the penalized inner-solver
/// fitness, returning the best placement and its recomputed solution.
PsoSolution pso_optimize(const std::vector<UserChannelParams>& users, const ScenarioConfig& cfg,
                         const PsoParams& params, RngStream& rng,
                         const IterationObserver& observer = {});

} // namespace mamaxmin
