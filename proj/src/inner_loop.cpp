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

#include "mamaxmin/inner_loop.hpp"

#include <cmath>
#include <stdexcept>

namespace mamaxmin {

InnerSolution bcd_solve(const Apv& apv, const std::vector<UserChannelParams>& users,
                        const ScenarioConfig& cfg,
                        const std::optional<RVector>& initial_power) {
  if (apv.count() != cfg.antennas)
    throw std::invalid_argument("bcd_solve: placement has wrong antenna count");
  if (static_cast<int>(users.size()) != cfg.users)
    throw std::invalid_argument("bcd_solve: user list has wrong size");

  const double noise = cfg.noise_w();
  const double pmax = cfg.pmax_w();
  const CMatrix channel = channel_matrix(apv, users, cfg.lambda_m);

  InnerSolution current;
  current.power = initial_power.value_or(RVector::Constant(cfg.users, pmax));
  if (current.power.size() != cfg.users)
    throw std::invalid_argument("bcd_solve: initial power length mismatch");
  current.combiner = mmse_combiner(channel, current.power, noise);
  current.report = sinr_report(current.combiner, channel, current.power, noise);
  current.min_rate = current.report.min_rate;
  current.trace.push_back(current.min_rate);

  InnerSolution best = current;
  double previous = current.min_rate;
  bool converged = false;
  while (current.iterations < cfg.max_alternations) {
    current.power = max_min_power(channel, current.combiner, pmax, noise, cfg.bisection_tol).power;
    current.combiner = mmse_combiner(channel, current.power, noise);
    current.report = sinr_report(current.combiner, channel, current.power, noise);
    current.min_rate = current.report.min_rate;
    current.trace.push_back(current.min_rate);
    ++current.iterations;

    if (current.min_rate >= best.min_rate) {
      best.combiner = current.combiner;
      best.power = current.power;
      best.report = current.report;
      best.min_rate = current.min_rate;
    }
    if (std::abs(current.min_rate - previous) < cfg.alternation_tol) {
      converged = true;
      break;
    }
    previous = current.min_rate;
  }

  if (converged) return current;

  // Iteration cap: hand back the best iterate seen, with the full trace.
  best.iterations = current.iterations;
  best.trace = std::move(current.trace);
  best.hit_iteration_cap = true;
  return best;
}

} // namespace mamaxmin
