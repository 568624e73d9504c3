// Copyright 2026 The qwavelet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace qwt {

using cplx = std::complex<double>;

/// 2x2 gate matrix. Unaligned so it can live inside std::vector and std::variant.
using Matrix2 = Eigen::Matrix<cplx, 2, 2, Eigen::DontAlign>;
using DenseMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kUnitaryTol = 1e-12;

inline Matrix2 identity_matrix() { return Matrix2::Identity(); }

inline Matrix2 pauli_x_matrix() {
  Matrix2 m;
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

inline Matrix2 hadamard_matrix() {
  const double r = 1.0 / std::numbers::sqrt2;
  Matrix2 m;
  m << r, r, r, -r;
  return m;
}

/// Real plane rotation [[cos, sin], [-sin, cos]].
inline Matrix2 rotation_matrix(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Matrix2 m;
  m << c, s, -s, c;
  return m;
}

inline double unitarity_residual(const Matrix2& m) {
  return (m.adjoint() * m - Matrix2::Identity()).cwiseAbs().maxCoeff();
}

inline bool is_unitary(const Matrix2& m, double tol = kUnitaryTol) {
  return unitarity_residual(m) <= tol;
}

inline double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return HUGE_VAL;
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

inline double max_abs_diff(const CVector& a, const CVector& b) {
  if (a.size() != b.size()) return HUGE_VAL;
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

inline constexpr bool is_pow2(std::uint64_t v) { return std::has_single_bit(v); }

/// Smallest n with 2^n >= v (0 for v <= 1).
inline constexpr std::size_t ceil_log2(std::uint64_t v) {
  return v <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(v - 1));
}

/// Exponent of the largest power of two dividing v (v > 0).
inline constexpr std::size_t two_adic_valuation(std::uint64_t v) {
  return static_cast<std::size_t>(std::countr_zero(v));
}

}  // namespace qwt
