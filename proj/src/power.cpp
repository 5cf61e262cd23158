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

#include "mamaxmin/power.hpp"

#include <stdexcept>

#include "mamaxmin/errors.hpp"
#include "mamaxmin/linalg.hpp"

namespace mamaxmin {

RMatrix sinr_balance_matrix(const RMatrix& gain, double target_sinr) {
  if (!(target_sinr > 0.0))
    throw std::invalid_argument("sinr_balance_matrix: target must be > 0");
  RMatrix balance = -gain;
  balance.diagonal() = gain.diagonal() / target_sinr;
  return balance;
}

std::optional<RVector> power_for_target(const SinrCoefficients& coeffs, double target_sinr) {
  RVector power;
  try {
    power = general_solve(sinr_balance_matrix(coeffs.gain, target_sinr), coeffs.noise);
  } catch (const SingularMatrix&) {
    return std::nullopt;
  }
  if (!power.allFinite()) return std::nullopt;
  if ((power.array() < -kNegativePowerTol).any()) return std::nullopt;
  power = power.cwiseMax(0.0);
  return power;
}

BisectionResult max_min_power(const CMatrix& channel, const Combiner& combiner,
                              double pmax_w, double noise_w, double tol,
                              std::vector<BisectionStep>* trace) {
  if (!(tol > 0.0)) throw std::invalid_argument("max_min_power: tol must be > 0");
  if (!(noise_w > 0.0)) throw std::invalid_argument("max_min_power: noise power must be > 0");
  if (pmax_w < 0.0) throw std::invalid_argument("max_min_power: pmax must be >= 0");

  const Eigen::Index n_users = channel.cols();
  BisectionResult result;
  result.power = RVector::Zero(n_users);

  // The common SINR cannot exceed the single-user bound of the weakest user,
  // so the search interval [0, pmax * min_k ||h_k||^2 / noise] brackets the
  // optimum.
  double min_gain = channel.colwise().squaredNorm().minCoeff();
  double hi = pmax_w * min_gain / noise_w;
  if (!(hi > 0.0)) return result;

  const SinrCoefficients coeffs = sinr_coefficients(combiner, channel, noise_w);
  double lo = 0.0;
  while (hi - lo > tol) {
    const double mid = (lo + hi) / 2.0;
    ++result.iterations;
    auto power = power_for_target(coeffs, mid);
    const bool feasible = power.has_value() && power->maxCoeff() <= pmax_w;
    if (trace) trace->push_back({mid, feasible, power.value_or(RVector())});
    if (feasible) {
      lo = mid;
      result.sinr = mid;
      result.power = *power;
    } else {
      hi = mid;
    }
  }
  result.power = result.power.cwiseMax(0.0).cwiseMin(pmax_w);
  return result;
}

} // namespace mamaxmin
