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

#include <string>
#include <vector>

#include "mamaxmin/pso.hpp"

namespace mamaxmin {

/// Benchmark scheme selector.
enum class Scheme { kMa, kFpa, kAps, kMpzf };

std::string scheme_tag(Scheme scheme);
Scheme scheme_from_tag(const std::string& tag);  ///< throws ConfigError on unknown tag

/// Half-wavelength uniform planar array centered at the region origin:
/// floor(sqrt(M)) rows, antennas filled row-major with the last row
/// left-aligned.  Throws RegionTooSmall when the grid does not fit.
Apv fpa_layout(int antennas, double lambda_m, double region_m);

/// Inner solver at the fixed planar-array layout.
InnerSolution fpa_evaluate(const std::vector<UserChannelParams>& users,
                           const ScenarioConfig& cfg);

struct ApsOptions {
  int max_cycles = 10;
};

struct ApsResult {
  Apv apv;
  InnerSolution solution;
  int cycles = 0;  ///< full antenna sweeps executed
};

/// Alternating position selection over the half-wavelength grid covering the
/// region: starting from the planar array, each antenna in turn moves to the
/// best grid point at least the minimum distance away from the others, or
/// keeps its position when no grid point is strictly better.  Stops after a
/// full sweep without movement or after max_cycles sweeps.  The objective is
/// non-decreasing across moves.
ApsResult aps_optimize(const std::vector<UserChannelParams>& users, const ScenarioConfig& cfg,
                       const ApsOptions& options = {});

/// Zero-forcing combining at full transmit power for a fixed placement.
/// A rank-deficient channel scores zero rate instead of failing the trial.
InnerSolution mpzf_evaluate(const Apv& apv, const std::vector<UserChannelParams>& users,
                            const ScenarioConfig& cfg);

struct MpzfSolution {
  Apv apv;
  InnerSolution solution;
  std::vector<FitnessValue> history;
};

/// Position optimization with the same swarm machinery as pso_optimize but a
/// maximum-power zero-forcing fitness.
MpzfSolution mpzf_optimize(const std::vector<UserChannelParams>& users,
                           const ScenarioConfig& cfg, const PsoParams& params, RngStream& rng);

} // namespace mamaxmin
