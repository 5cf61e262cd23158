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

#include <Eigen/Dense>

#include "mamaxmin/errors.hpp"

namespace mamaxmin {

/// Relative pivot magnitude below which a factorization is declared singular.
inline constexpr double kSingularPivotTol = 1e-14;

/// Relative residual bound every solve must satisfy.
inline constexpr double kSolveResidualTol = 1e-10;

namespace detail {

template <typename MatA, typename MatX, typename MatB>
void check_solve_residual(const MatA& lhs, const MatX& x, const MatB& rhs) {
  const double rhs_norm = rhs.norm();
  if (rhs_norm == 0.0) return;
  const double rel = (lhs * x - rhs).norm() / rhs_norm;
  if (!(rel <= kSolveResidualTol))
    throw SingularMatrix("linear solve residual " + std::to_string(rel) +
                         " exceeds " + std::to_string(kSolveResidualTol));
}

inline void check_pivots(double min_pivot, double max_pivot) {
  if (!(max_pivot > 0.0) || !(min_pivot >= kSingularPivotTol * max_pivot))
    throw SingularMatrix("pivot below singularity threshold");
}

} // namespace detail

/// Solve A X = B for Hermitian positive (semi)definite A without forming an
/// explicit inverse, via a pivoted LDL^H factorization.  Throws
/// SingularMatrix when a pivot falls below kSingularPivotTol relative to the
/// largest one, or when the reconstructed residual exceeds kSolveResidualTol.
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, DerivedB::ColsAtCompileTime>
hermitian_solve(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  static_assert(std::is_same_v<Scalar, typename DerivedB::Scalar>,
                "hermitian_solve: operand scalar types must match");
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  const Mat lhs = a;
  if (lhs.rows() != lhs.cols())
    throw std::invalid_argument("hermitian_solve: matrix is not square");
  if (lhs.rows() != b.rows())
    throw std::invalid_argument("hermitian_solve: dimension mismatch");
  const double scale = lhs.cwiseAbs().maxCoeff();
  if ((lhs - lhs.adjoint()).cwiseAbs().maxCoeff() > 1e-8 * std::max(scale, 1e-300))
    throw std::invalid_argument("hermitian_solve: matrix is not Hermitian");

  const auto ldlt = lhs.ldlt();
  const auto pivots = ldlt.vectorD().cwiseAbs().eval();
  detail::check_pivots(pivots.minCoeff(), pivots.maxCoeff());

  Eigen::Matrix<Scalar, Eigen::Dynamic, DerivedB::ColsAtCompileTime> x = ldlt.solve(b.derived());
  if (!x.allFinite()) throw SingularMatrix("hermitian_solve: non-finite solution");
  detail::check_solve_residual(lhs, x, b.derived());
  return x;
}

/// Solve A X = B for a general square A by partial-pivoted LU elimination.
/// Same singularity and residual policy as hermitian_solve.
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, DerivedB::ColsAtCompileTime>
general_solve(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  static_assert(std::is_same_v<Scalar, typename DerivedB::Scalar>,
                "general_solve: operand scalar types must match");
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  const Mat lhs = a;
  if (lhs.rows() != lhs.cols())
    throw std::invalid_argument("general_solve: matrix is not square");
  if (lhs.rows() != b.rows())
    throw std::invalid_argument("general_solve: dimension mismatch");
  if (!lhs.allFinite()) throw SingularMatrix("general_solve: non-finite matrix");

  const Eigen::PartialPivLU<Mat> lu(lhs);
  const auto pivots = lu.matrixLU().diagonal().cwiseAbs().eval();
  detail::check_pivots(pivots.minCoeff(), pivots.maxCoeff());

  Eigen::Matrix<Scalar, Eigen::Dynamic, DerivedB::ColsAtCompileTime> x = lu.solve(b.derived());
  if (!x.allFinite()) throw SingularMatrix("general_solve: non-finite solution");
  detail::check_solve_residual(lhs, x, b.derived());
  return x;
}

} // namespace mamaxmin
