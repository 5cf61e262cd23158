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

#include <complex>

#include "mamaxmin/linalg.hpp"
#include "mamaxmin/rng.hpp"
#include "mamaxmin/types.hpp"

using namespace mamaxmin;

namespace {

CMatrix random_cmatrix(int rows, int cols, RngStream& rng) {
  CMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = rng.cscg(1.0);
  return m;
}

// Independent closed-form inverse of a 2x2 matrix via the adjugate.
CMatrix adjugate_inverse_2x2(const CMatrix& a) {
  const Complex det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  CMatrix inv(2, 2);
  inv << a(1, 1), -a(0, 1), -a(1, 0), a(0, 0);
  return inv / det;
}

// Independent Cramer's-rule solver for 3x3 systems.
CVector cramer_solve_3x3(const CMatrix& a, const CVector& b) {
  auto det3 = [](const CMatrix& m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  };
  const Complex det = det3(a);
  CVector x(3);
  for (int col = 0; col < 3; ++col) {
    CMatrix numerator = a;
    numerator.col(col) = b;
    x[col] = det3(numerator) / det;
  }
  return x;
}

} // namespace

TEST_CASE("hermitian_solve: identity and scaling cases") {
  RngStream rng(7);
  const CMatrix b = random_cmatrix(3, 2, rng);
  CHECK(hermitian_solve(CMatrix(CMatrix::Identity(3, 3)), b).isApprox(b, 1e-14));

  const CMatrix two_eye = 2.0 * CMatrix::Identity(2, 2);
  const CMatrix half = hermitian_solve(two_eye, CMatrix(CMatrix::Identity(2, 2)));
  CHECK(half.isApprox(CMatrix(0.5 * CMatrix::Identity(2, 2)), 1e-14));
}

TEST_CASE("hermitian_solve: residual bound and adjugate oracle") {
  RngStream rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    const CMatrix m = random_cmatrix(4, 4, rng);
    const CMatrix a = m * m.adjoint() + CMatrix::Identity(4, 4);
    const CMatrix b = random_cmatrix(4, 1, rng);
    const CMatrix x = hermitian_solve(a, b);
    CHECK((a * x - b).norm() / b.norm() <= 1e-10);
  }
  for (int rep = 0; rep < 20; ++rep) {
    const CMatrix m = random_cmatrix(2, 2, rng);
    const CMatrix a = m * m.adjoint() + CMatrix::Identity(2, 2);
    const CMatrix b = random_cmatrix(2, 1, rng);
    const CMatrix expected = adjugate_inverse_2x2(a) * b;
    CHECK(hermitian_solve(a, b).isApprox(expected, 1e-9));
  }
}

TEST_CASE("hermitian_solve: inverse identity up to 16x16") {
  RngStream rng(13);
  for (int n : {2, 5, 9, 16}) {
    const CMatrix m = random_cmatrix(n, n, rng);
    const CMatrix a = m * m.adjoint() + CMatrix::Identity(n, n);
    const CMatrix inv = hermitian_solve(a, CMatrix(CMatrix::Identity(n, n)));
    CHECK((inv * a - CMatrix::Identity(n, n)).norm() <= 1e-9 * n);
  }
}

TEST_CASE("hermitian_solve: rejects singular and non-Hermitian input") {
  CMatrix singular = CMatrix::Zero(2, 2);
  singular(0, 0) = 1.0;
  CHECK_THROWS_AS(hermitian_solve(singular, CMatrix(CMatrix::Identity(2, 2))), SingularMatrix);

  CMatrix skew(2, 2);
  skew << Complex(1, 0), Complex(2, 0), Complex(5, 0), Complex(1, 0);
  CHECK_THROWS_AS(hermitian_solve(skew, CMatrix(CMatrix::Identity(2, 2))),
                  std::invalid_argument);
}

TEST_CASE("general_solve: trivial systems") {
  CVector b(2);
  b << Complex(1, 0), Complex(2, 0);
  CHECK(general_solve(CMatrix(CMatrix::Identity(2, 2)), b).isApprox(b, 1e-14));

  CMatrix diag = CMatrix::Zero(2, 2);
  diag(0, 0) = 2.0;
  diag(1, 1) = 4.0;
  CVector rhs(2);
  rhs << Complex(2, 0), Complex(4, 0);
  CVector ones(2);
  ones << Complex(1, 0), Complex(1, 0);
  CHECK(general_solve(diag, rhs).isApprox(ones, 1e-14));
}

TEST_CASE("general_solve: Cramer's-rule oracle on 3x3 systems") {
  RngStream rng(17);
  for (int rep = 0; rep < 50; ++rep) {
    // Diagonal boost keeps the test matrices well-conditioned.
    CMatrix a = random_cmatrix(3, 3, rng);
    a += 3.0 * CMatrix::Identity(3, 3);
    const CVector b = random_cmatrix(3, 1, rng);
    CHECK(general_solve(a, b).isApprox(cramer_solve_3x3(a, b), 1e-9));
  }
}

TEST_CASE("general_solve: singular matrix raises") {
  CMatrix a(2, 2);
  a << Complex(1, 0), Complex(2, 0), Complex(2, 0), Complex(4, 0);
  CVector b(2);
  b << Complex(1, 0), Complex(1, 0);
  CHECK_THROWS_AS(general_solve(a, b), SingularMatrix);

  RMatrix zero = RMatrix::Zero(3, 3);
  CHECK_THROWS_AS(general_solve(zero, RVector(RVector::Ones(3))), SingularMatrix);
}

TEST_CASE("general_solve: real-valued systems") {
  RMatrix a(2, 2);
  a << 3.0, 1.0, -1.0, 2.0;
  RVector b(2);
  b << 5.0, 0.0;
  const RVector x = general_solve(a, b);
  CHECK((a * x - b).norm() <= 1e-12);
}

TEST_CASE("rng: uniform support and degenerate bounds") {
  RngStream rng(1);
  CHECK(rng.uniform(3.0, 3.0) == 3.0);
  for (int i = 0; i < 1000; ++i) {
    const double draw = rng.uniform(-2.0, 5.0);
    CHECK(draw >= -2.0);
    CHECK(draw <= 5.0);
  }
  CHECK_THROWS_AS(rng.uniform(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("rng: uniform mean matches the law of large numbers") {
  RngStream rng(2);
  double sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) sum += rng.uniform(0.0, 1.0);
  CHECK(std::abs(sum / n - 0.5) < 0.01);
}

TEST_CASE("rng: identical identity reproduces identical sequences") {
  RngStream a(42, 9), b(42, 9);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

  RngStream c(42, 9), d(42, 9);
  for (int i = 0; i < 100; ++i) CHECK(c.uniform(0, 1) == d.uniform(0, 1));
}

TEST_CASE("rng: cscg moments and zero variance") {
  RngStream rng(3);
  CHECK(rng.cscg(0.0) == Complex(0.0, 0.0));

  double power = 0.0, mean_re = 0.0, mean_im = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const Complex draw = rng.cscg(2.0);
    power += std::norm(draw);
    mean_re += draw.real();
    mean_im += draw.imag();
  }
  CHECK(std::abs(power / n - 2.0) / 2.0 < 0.03);
  CHECK(std::abs(mean_re / n) < 0.02);
  CHECK(std::abs(mean_im / n) < 0.02);
}

TEST_CASE("rng: distinct streams are uncorrelated") {
  RngStream base(123);
  RngStream a = base.split(1);
  RngStream b = base.split(2);
  const int n = 100000;
  double sum_a = 0, sum_b = 0, sum_ab = 0, sum_a2 = 0, sum_b2 = 0;
  for (int i = 0; i < n; ++i) {
    const double xa = a.uniform(0, 1);
    const double xb = b.uniform(0, 1);
    sum_a += xa;
    sum_b += xb;
    sum_ab += xa * xb;
    sum_a2 += xa * xa;
    sum_b2 += xb * xb;
  }
  const double cov = sum_ab / n - (sum_a / n) * (sum_b / n);
  const double var_a = sum_a2 / n - (sum_a / n) * (sum_a / n);
  const double var_b = sum_b2 / n - (sum_b / n) * (sum_b / n);
  CHECK(std::abs(cov / std::sqrt(var_a * var_b)) < 0.02);
}

TEST_CASE("rng: split depends on identity, not cursor position") {
  RngStream a(5, 77);
  RngStream b = a;
  for (int i = 0; i < 10; ++i) a.next_u64();  // advance one copy only
  RngStream child_a = a.split(3);
  RngStream child_b = b.split(3);
  for (int i = 0; i < 50; ++i) CHECK(child_a.next_u64() == child_b.next_u64());
}
