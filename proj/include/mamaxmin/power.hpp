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

#include "mamaxmin/receiver.hpp"
#include "mamaxmin/types.hpp"

namespace mamaxmin {

/// Negative powers within this magnitude are treated as solver round-off and
/// clamped to zero.
inline constexpr double kNegativePowerTol = 1e-12;

/// Matrix of the SINR-balancing linear system for a common target: diagonal
/// entries gain(k,k)/target, off-diagonal entries -gain(k,i).  Solving it
/// against the noise vector yields powers that meet the target with equality
/// for every user.
RMatrix sinr_balance_matrix(const RMatrix& gain, double target_sinr);

/// Powers achieving the common SINR target under a fixed combiner, or
/// nullopt when the balancing system is singular or yields a negative or
/// non-finite power.  Tiny negative entries are clamped to zero.
std::optional<RVector> power_for_target(const SinrCoefficients& coeffs, double target_sinr);

/// One bisection midpoint: the tested target, the candidate powers (empty
/// when the balancing solve failed) and the feasibility verdict.
struct BisectionStep {
  double target = 0.0;
  bool feasible = false;
  RVector power;
};

struct BisectionResult {
  RVector power;        ///< feasible powers, exactly clamped into [0, pmax]
  double sinr = 0.0;    ///< common SINR achieved at the returned powers
  int iterations = 0;   ///< number of midpoints evaluated
  bool feasible = true; ///< returned powers satisfy the box constraints
};

/// Max-min power control for a fixed combiner: bisection over the common
/// SINR target on [0, pmax * min_k ||h_k||^2 / noise].  A midpoint is
/// feasible when the balancing powers exist, are non-negative and do not
/// exceed pmax.  Returns the powers of the last feasible midpoint, or all
/// zeros when no midpoint was feasible.  The optional trace records every
/// midpoint for diagnostics.
BisectionResult max_min_power(const CMatrix& channel, const Combiner& combiner,
                              double pmax_w, double noise_w, double tol,
                              std::vector<BisectionStep>* trace = nullptr);

} // namespace mamaxmin
