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

#include "mamaxmin/receiver.hpp"

#include <cmath>

#include "mamaxmin/errors.hpp"
#include "mamaxmin/linalg.hpp"

namespace mamaxmin {

namespace {

// Cap used when an SINR denominator underflows while the numerator is
// positive; keeps the per-user ordering without producing Inf rates.
constexpr double kSinrCap = 1e30;
constexpr double kDenomFloor = 1e-30;

} // namespace

Combiner mmse_combiner(const CMatrix& channel, const RVector& power_w, double noise_w) {
  if (power_w.size() != channel.cols())
    throw std::invalid_argument("mmse_combiner: power vector length mismatch");
  if ((power_w.array() < 0.0).any())
    throw std::invalid_argument("mmse_combiner: negative transmit power");
  if (!(noise_w > 0.0))
    throw std::invalid_argument("mmse_combiner: noise power must be > 0");

  CMatrix covariance = channel * power_w.cast<Complex>().asDiagonal() * channel.adjoint();
  // Symmetrize before adding the noise floor; the product above is Hermitian
  // only up to round-off.
  covariance = ((covariance + covariance.adjoint()) / 2.0).eval();
  covariance.diagonal().array() += Complex(noise_w, 0.0);
  return {hermitian_solve(covariance, channel), CombinerKind::kMmse};
}

Combiner zf_combiner(const CMatrix& channel) {
  const CMatrix gram = channel.adjoint() * channel;
  try {
    const CMatrix identity = CMatrix::Identity(gram.rows(), gram.cols());
    return {channel * hermitian_solve(gram, identity), CombinerKind::kZf};
  } catch (const SingularMatrix& e) {
    throw RankDeficient(std::string("zf_combiner: ") + e.what());
  }
}

SinrReport sinr_report(const Combiner& combiner, const CMatrix& channel,
                       const RVector& power_w, double noise_w) {
  const Eigen::Index n_users = channel.cols();
  if (combiner.weights.cols() != n_users || combiner.weights.rows() != channel.rows())
    throw std::invalid_argument("sinr_report: combiner/channel dimension mismatch");
  if (power_w.size() != n_users)
    throw std::invalid_argument("sinr_report: power vector length mismatch");

  const CMatrix cross = combiner.weights.adjoint() * channel;  // (k, i) = w_k^H h_i
  SinrReport report;
  report.sinr.resize(n_users);
  report.rates.resize(n_users);
  for (Eigen::Index k = 0; k < n_users; ++k) {
    const double signal = std::norm(cross(k, k)) * power_w[k];
    double denom = combiner.weights.col(k).squaredNorm() * noise_w;
    for (Eigen::Index i = 0; i < n_users; ++i)
      if (i != k) denom += std::norm(cross(k, i)) * power_w[i];
    double sinr = 0.0;
    if (signal > 0.0)
      sinr = (denom < kDenomFloor) ? kSinrCap : signal / denom;
    report.sinr[k] = sinr;
    report.rates[k] = std::log2(1.0 + sinr);
  }
  report.min_rate = report.rates.minCoeff();
  return report;
}

SinrCoefficients sinr_coefficients(const Combiner& combiner, const CMatrix& channel,
                                   double noise_w) {
  const Eigen::Index n_users = channel.cols();
  if (combiner.weights.cols() != n_users || combiner.weights.rows() != channel.rows())
    throw std::invalid_argument("sinr_coefficients: combiner/channel dimension mismatch");

  SinrCoefficients coeffs;
  coeffs.gain = (combiner.weights.adjoint() * channel).cwiseAbs2();
  coeffs.noise.resize(n_users);
  for (Eigen::Index k = 0; k < n_users; ++k) {
    const double energy = combiner.weights.col(k).squaredNorm();
    if (energy == 0.0)
      throw DegenerateCombiner("sinr_coefficients: combiner column " + std::to_string(k) +
                               " is zero");
    coeffs.noise[k] = energy * noise_w;
  }
  return coeffs;
}

} // namespace mamaxmin
