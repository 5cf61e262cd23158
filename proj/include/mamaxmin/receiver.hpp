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

#include "mamaxmin/types.hpp"

namespace mamaxmin {

enum class CombinerKind { kMmse, kZf };

/// Receive combining matrix; column k is the combiner for user k.
struct Combiner {
  CMatrix weights;
  CombinerKind kind = CombinerKind::kMmse;
};

/// Post-combining SINR and achievable rate per user.
struct SinrReport {
  RVector sinr;       ///< linear SINR per user
  RVector rates;      ///< log2(1 + sinr), bps/Hz
  double min_rate = 0.0;
};

/// Quadratic couplings that determine the SINRs for a fixed combiner:
/// gain(k, i) = |w_k^H h_i|^2 and noise(k) = ||w_k||^2 * sigma2.  The SINR of
/// user k is p_k gain(k,k) / (sum_{i != k} p_i gain(k,i) + noise(k)).
struct SinrCoefficients {
  RMatrix gain;
  RVector noise;
};

/// MMSE combiner for the given channel, per-user transmit powers (watts) and
/// noise power (watts): solves (H P H^H + sigma2 I) W = H column-wise.
Combiner mmse_combiner(const CMatrix& channel, const RVector& power_w, double noise_w);

/// Zero-forcing combiner W = H (H^H H)^-1.  Throws RankDeficient when the
/// channel does not have full column rank.
Combiner zf_combiner(const CMatrix& channel);

/// Evaluate per-user SINRs and rates for a fixed combiner and power vector.
/// Vanishing denominators with a positive numerator are capped at 1e30 so a
/// degenerate input cannot propagate Inf into the rates.
SinrReport sinr_report(const Combiner& combiner, const CMatrix& channel,
                       const RVector& power_w, double noise_w);

/// Combined link gains and post-combining noise powers for an arbitrary
/// fixed combiner.  Throws DegenerateCombiner when some combiner column is
/// identically zero.
SinrCoefficients sinr_coefficients(const Combiner& combiner, const CMatrix& channel,
                                   double noise_w);

} // namespace mamaxmin
