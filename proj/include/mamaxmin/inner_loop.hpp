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

#include <optional>
#include <vector>

#include "mamaxmin/channel.hpp"
#include "mamaxmin/power.hpp"
#include "mamaxmin/receiver.hpp"

namespace mamaxmin {

/// Joint combining/power solution for one antenna placement.
struct InnerSolution {
  Combiner combiner;
  RVector power;
  SinrReport report;
  double min_rate = 0.0;           ///< equals report.min_rate
  int iterations = 0;              ///< alternations performed
  std::vector<double> trace;       ///< objective value per alternation, starting at the initial point
  bool hit_iteration_cap = false;
};

/// Alternating optimization of the receive combiner and the transmit powers
/// for a fixed antenna placement: starting from full power, repeat MMSE
/// combining for the current powers and max-min power control for the
/// current combiner until the objective moves by less than
/// cfg.alternation_tol.  The objective is non-decreasing across alternations
/// up to the power-search accuracy.  If the iteration cap is reached the best
/// iterate seen so far is returned with hit_iteration_cap set.
///
/// initial_power overrides the full-power starting point (used for warm
/// restarts).
InnerSolution bcd_solve(const Apv& apv, const std::vector<UserChannelParams>& users,
                        const ScenarioConfig& cfg,
                        const std::optional<RVector>& initial_power = std::nullopt);

} // namespace mamaxmin
