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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mamaxmin/errors.hpp"
#include "mamaxmin/receiver.hpp"
#include "mamaxmin/rng.hpp"

using namespace mamaxmin;

namespace {

CMatrix random_channel(int rows, int cols, RngStream& rng) {
  CMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = rng.cscg(1.0);
  return m;
}

double user_sinr(const CVector& w, const CMatrix& h, const RVector& p, double noise, int k) {
  const double signal = std::norm(w.dot(h.col(k))) * p[k];
  double denom = w.squaredNorm() * noise;
  for (int i = 0; i < h.cols(); ++i)
    if (i != k) denom += std::norm(w.dot(h.col(i))) * p[i];
  return signal / denom;
}

} // namespace

TEST_CASE("mmse_combiner: matched filter direction for a single user") {
  RngStream rng(21);
  const CMatrix h = random_channel(4, 1, rng);
  const Combiner combiner = mmse_combiner(h, RVector::Constant(1, 0.5), 1e-3);
  const CVector w = combiner.weights.col(0);
  const double cosine = std::abs(w.dot(h.col(0))) / (w.norm() * h.norm());
  CHECK(std::acos(std::min(cosine, 1.0)) < 1e-8);
}

TEST_CASE("mmse_combiner: zero power reduces to channel over noise") {
  RngStream rng(22);
  const CMatrix h = random_channel(5, 3, rng);
  const double noise = 0.37;
  const Combiner combiner = mmse_combiner(h, RVector::Zero(3), noise);
  CHECK(combiner.weights.isApprox(CMatrix(h / noise), 1e-12));
}

TEST_CASE("mmse_combiner: per-user SINR dominates random perturbations") {
  const int antennas = 4, users = 3;
  const double noise = 0.05;
  for (int seed = 0; seed < 100; ++seed) {
    RngStream rng(2300 + seed);
    const CMatrix h = random_channel(antennas, users, rng);
    const RVector p = RVector::Constant(users, 0.8);
    const Combiner mmse = mmse_combiner(h, p, noise);
    for (int k = 0; k < users; ++k) {
      const CVector w = mmse.weights.col(k);
      const double best = user_sinr(w, h, p, noise, k);
      for (int rep = 0; rep < 100; ++rep) {
        CVector direction(antennas);
        for (int m = 0; m < antennas; ++m) direction[m] = rng.cscg(1.0);
        const CVector perturbed = w + 0.1 * direction;
        CHECK(best >= user_sinr(perturbed, h, p, noise, k) * (1.0 - 1e-9));
      }
    }
  }
}

TEST_CASE("mmse_combiner: input validation") {
  RngStream rng(24);
  const CMatrix h = random_channel(3, 2, rng);
  CHECK_THROWS_AS(mmse_combiner(h, RVector::Ones(3), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(mmse_combiner(h, RVector::Ones(2), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(mmse_combiner(h, RVector(-RVector::Ones(2)), 1.0), std::invalid_argument);
}

TEST_CASE("zf_combiner: defining properties") {
  RngStream rng(25);

  SUBCASE("orthonormal columns are a fixed point") {
    CMatrix h = CMatrix::Zero(4, 2);
    h(0, 0) = 1.0;
    h(2, 1) = 1.0;
    CHECK(zf_combiner(h).weights.isApprox(h, 1e-12));
  }

  SUBCASE("cross terms vanish and the Gram product is the identity") {
    const CMatrix h = random_channel(5, 3, rng);
    const Combiner zf = zf_combiner(h);
    const CMatrix cross = zf.weights.adjoint() * h;
    CHECK((cross - CMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-8);
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 3; ++i)
        if (i != k)
          CHECK(std::abs(cross(k, i)) <=
                1e-8 * zf.weights.col(k).norm() * h.col(i).norm());
  }

  SUBCASE("3x2 normal-equations oracle") {
    for (int rep = 0; rep < 20; ++rep) {
      const CMatrix h = random_channel(3, 2, rng);
      const CMatrix gram = h.adjoint() * h;
      // Closed-form 2x2 inverse of the Gram matrix.
      const Complex det = gram(0, 0) * gram(1, 1) - gram(0, 1) * gram(1, 0);
      CMatrix inv(2, 2);
      inv << gram(1, 1), -gram(0, 1), -gram(1, 0), gram(0, 0);
      inv /= det;
      CHECK(zf_combiner(h).weights.isApprox(CMatrix(h * inv), 1e-9));
    }
  }

  SUBCASE("rank-deficient channel raises") {
    CMatrix h = random_channel(4, 1, rng);
    CMatrix doubled(4, 2);
    doubled << h, h;
    CHECK_THROWS_AS(zf_combiner(doubled), RankDeficient);
  }
}

TEST_CASE("sinr_report: closed-form cases") {
  RngStream rng(26);

  SUBCASE("zero power means zero rate") {
    const CMatrix h = random_channel(4, 2, rng);
    const Combiner combiner = mmse_combiner(h, RVector::Zero(2), 1.0);
    const SinrReport report = sinr_report(combiner, h, RVector::Zero(2), 1.0);
    CHECK(report.sinr.maxCoeff() == 0.0);
    CHECK(report.rates.maxCoeff() == 0.0);
    CHECK(report.min_rate == 0.0);
  }

  SUBCASE("single user with a matched filter") {
    const CMatrix h = random_channel(4, 1, rng);
    const double noise = 0.01, power = 0.25;
    const Combiner matched{h, CombinerKind::kMmse};
    const SinrReport report = sinr_report(matched, h, RVector::Constant(1, power), noise);
    CHECK(report.sinr[0] ==
          doctest::Approx(power * h.squaredNorm() / noise).epsilon(1e-12));
    CHECK(report.min_rate == doctest::Approx(std::log2(1.0 + report.sinr[0])));
  }

  SUBCASE("zero-forcing leaves only the noise term") {
    const CMatrix h = random_channel(6, 3, rng);
    const double noise = 0.02;
    const RVector p = RVector::Constant(3, 0.6);
    const Combiner zf = zf_combiner(h);
    const SinrReport report = sinr_report(zf, h, p, noise);
    for (int k = 0; k < 3; ++k) {
      const double expected = p[k] / (zf.weights.col(k).squaredNorm() * noise);
      CHECK(std::abs(report.sinr[k] - expected) / expected < 1e-6);
    }
  }

  SUBCASE("combiner scaling leaves the SINR unchanged") {
    const CMatrix h = random_channel(4, 2, rng);
    const RVector p = RVector::Constant(2, 0.3);
    Combiner combiner = mmse_combiner(h, p, 0.05);
    const SinrReport before = sinr_report(combiner, h, p, 0.05);
    combiner.weights.col(0) *= Complex(-2.3, 1.7);
    combiner.weights.col(1) *= Complex(0.0, 0.4);
    const SinrReport after = sinr_report(combiner, h, p, 0.05);
    CHECK(before.sinr.isApprox(after.sinr, 1e-10));
  }
}

TEST_CASE("sinr_coefficients: consistency with the SINR report") {
  RngStream rng(27);
  const CMatrix h = random_channel(5, 3, rng);
  const RVector p(RVector::Constant(3, 0.9));
  const double noise = 0.07;
  const Combiner combiner = mmse_combiner(h, p, noise);
  const SinrCoefficients coeffs = sinr_coefficients(combiner, h, noise);

  CHECK((coeffs.gain.array() >= 0.0).all());
  CHECK((coeffs.noise.array() > 0.0).all());

  const SinrReport report = sinr_report(combiner, h, p, noise);
  for (int k = 0; k < 3; ++k) {
    double denom = coeffs.noise[k];
    for (int i = 0; i < 3; ++i)
      if (i != k) denom += p[i] * coeffs.gain(k, i);
    const double expected = p[k] * coeffs.gain(k, k) / denom;
    CHECK(std::abs(report.sinr[k] - expected) <= 1e-12 * expected);
  }
}

TEST_CASE("sinr_coefficients: zero combiner column raises") {
  RngStream rng(28);
  const CMatrix h = random_channel(4, 2, rng);
  Combiner combiner = mmse_combiner(h, RVector::Ones(2), 0.1);
  combiner.weights.col(1).setZero();
  CHECK_THROWS_AS(sinr_coefficients(combiner, h, 0.1), DegenerateCombiner);
}
