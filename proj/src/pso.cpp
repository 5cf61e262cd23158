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

#include "mamaxmin/pso.hpp"

#include <cmath>
#include <stdexcept>

#include "mamaxmin/errors.hpp"

namespace mamaxmin {

void PsoParams::validate() const {
  auto fail = [](const std::string& msg) { throw ConfigError("pso: " + msg); };
  if (swarm_size < 1) fail("N must be >= 1");
  if (max_iterations < 0) fail("T must be >= 0");
  if (c1 < 0.0 || c2 < 0.0) fail("learning factors must be >= 0");
  if (!(omega_min <= omega_max)) fail("omega_min must not exceed omega_max");
  if (!(penalty_weight >= 0.0)) fail("tau must be >= 0");
  if (!(velocity_init_scale >= 0.0)) fail("velocity_init_scale must be >= 0");
}

double inertia_weight(int t, int max_iterations, double omega_min, double omega_max) {
  if (max_iterations <= 0) return omega_max;
  return omega_max - (omega_max - omega_min) * static_cast<double>(t) /
                         static_cast<double>(max_iterations);
}

RVector project_into_region(RVector coords, double side_m) {
  const double half = side_m / 2.0;
  return coords.cwiseMax(-half).cwiseMin(half);
}

int violation_pair_count(const Apv& apv, double min_dist_m) {
  const int n = apv.count();
  int violations = 0;
  for (int m = 0; m < n; ++m) {
    for (int i = m + 1; i < n; ++i) {
      const double dx = apv.x(m) - apv.x(i);
      const double dy = apv.y(m) - apv.y(i);
      if (std::sqrt(dx * dx + dy * dy) < min_dist_m) ++violations;
    }
  }
  return violations;
}

FitnessValue fitness(const Apv& apv, const std::vector<UserChannelParams>& users,
                     const ScenarioConfig& cfg, double penalty_weight) {
  FitnessValue result;
  result.violations = violation_pair_count(apv, cfg.min_dist_m());
  result.rate = bcd_solve(apv, users, cfg).min_rate;
  result.value = result.rate - penalty_weight * result.violations;
  return result;
}

SwarmState init_swarm(const PsoParams& params, const ScenarioConfig& cfg, RngStream& rng,
                      const FitnessFn& evaluate) {
  params.validate();
  const int dim = 2 * cfg.antennas;
  const double half = cfg.region_m() / 2.0;
  const double vel_half = half * params.velocity_init_scale;

  SwarmState state;
  state.positions.resize(params.swarm_size);
  state.velocities.resize(params.swarm_size);
  for (int n = 0; n < params.swarm_size; ++n) {
    RVector pos(dim), vel(dim);
    for (int i = 0; i < dim; ++i) pos[i] = rng.uniform(-half, half);
    for (int i = 0; i < dim; ++i) vel[i] = rng.uniform(-vel_half, vel_half);
    state.positions[n] = std::move(pos);
    state.velocities[n] = std::move(vel);
  }

  state.best_positions = state.positions;
  state.best_fitness.resize(params.swarm_size);
  for (int n = 0; n < params.swarm_size; ++n)
    state.best_fitness[n] = evaluate(Apv(state.positions[n]));

  int best_index = 0;
  for (int n = 1; n < params.swarm_size; ++n)
    if (state.best_fitness[n].value > state.best_fitness[best_index].value) best_index = n;
  state.global_best_position = state.best_positions[best_index];
  state.global_best_fitness = state.best_fitness[best_index];
  return state;
}

void update_particle(SwarmState& state, int n, double omega, const PsoParams& params,
                     double side_m, RngStream& rng) {
  RVector& vel = state.velocities[n];
  RVector& pos = state.positions[n];
  const RVector own_pull = state.best_positions[n] - pos;
  const RVector swarm_pull = state.global_best_position - pos;

  if (params.per_coordinate_random) {
    RVector own_scale(vel.size()), swarm_scale(vel.size());
    for (Eigen::Index i = 0; i < vel.size(); ++i) own_scale[i] = rng.uniform(0.0, 1.0);
    for (Eigen::Index i = 0; i < vel.size(); ++i) swarm_scale[i] = rng.uniform(0.0, 1.0);
    vel = omega * vel + params.c1 * own_scale.cwiseProduct(own_pull) +
          params.c2 * swarm_scale.cwiseProduct(swarm_pull);
  } else {
    const double own_scale = rng.uniform(0.0, 1.0);
    const double swarm_scale = rng.uniform(0.0, 1.0);
    vel = omega * vel + params.c1 * own_scale * own_pull + params.c2 * swarm_scale * swarm_pull;
  }
  pos = project_into_region(pos + vel, side_m);
}

PsoResult optimize_apv(const PsoParams& params, const ScenarioConfig& cfg, RngStream& rng,
                       const FitnessFn& evaluate, const IterationObserver& observer) {
  const double side = cfg.region_m();
  SwarmState state = init_swarm(params, cfg, rng, evaluate);

  PsoResult result;
  result.history.reserve(params.max_iterations + 1);
  result.history.push_back(state.global_best_fitness);
  if (observer) observer(0, state);

  std::vector<FitnessValue> pending(params.swarm_size);
  for (int t = 1; t <= params.max_iterations; ++t) {
    state.iteration = t;
    const double omega = inertia_weight(t, params.max_iterations, params.omega_min,
                                        params.omega_max);
    if (params.synchronous) {
      // All moves see the global best of the previous iteration; best-position
      // bookkeeping happens once the whole swarm has been re-evaluated.
      for (int n = 0; n < params.swarm_size; ++n)
        update_particle(state, n, omega, params, side, rng);
      for (int n = 0; n < params.swarm_size; ++n)
        pending[n] = evaluate(Apv(state.positions[n]));
      for (int n = 0; n < params.swarm_size; ++n) {
        if (pending[n].value > state.best_fitness[n].value) {
          state.best_fitness[n] = pending[n];
          state.best_positions[n] = state.positions[n];
        }
        if (pending[n].value > state.global_best_fitness.value) {
          state.global_best_fitness = pending[n];
          state.global_best_position = state.positions[n];
        }
      }
    } else {
      // A refreshed global best steers the remaining particles of the same
      // iteration.
      for (int n = 0; n < params.swarm_size; ++n) {
        update_particle(state, n, omega, params, side, rng);
        const FitnessValue fit = evaluate(Apv(state.positions[n]));
        if (fit.value > state.best_fitness[n].value) {
          state.best_fitness[n] = fit;
          state.best_positions[n] = state.positions[n];
        }
        if (fit.value > state.global_best_fitness.value) {
          state.global_best_fitness = fit;
          state.global_best_position = state.positions[n];
        }
      }
    }
    result.history.push_back(state.global_best_fitness);
    if (observer) observer(t, state);
  }

  result.best = Apv(state.global_best_position);
  result.best_fitness = state.global_best_fitness;
  return result;
}

PsoSolution pso_optimize(const std::vector<UserChannelParams>& users, const ScenarioConfig& cfg,
                         const PsoParams& params, RngStream& rng,
                         const IterationObserver& observer) {
  const FitnessFn evaluate = [&](const Apv& apv) {
    return fitness(apv, users, cfg, params.penalty_weight);
  };
  PsoResult search = optimize_apv(params, cfg, rng, evaluate, observer);

  PsoSolution out;
  out.apv = search.best;
  out.solution = bcd_solve(search.best, users, cfg);
  out.history = std::move(search.history);
  return out;
}

} // namespace mamaxmin
