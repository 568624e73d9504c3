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

// Reference computations used only by the tests. Nothing here calls into the
// simulator, builders or classical module; each routine goes through an
// independent route (explicit Kronecker products, integer arithmetic,
// direct index formulas).

#include "qwt/circuit.hpp"
#include "qwt/linalg.hpp"
#include "qwt/plan.hpp"

#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace qwt::oracle {

inline DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

inline DenseMatrix h2() {
  DenseMatrix h(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  h << r, r, r, -r;
  return h;
}

inline DenseMatrix identity(Eigen::Index d) { return DenseMatrix::Identity(d, d); }

/// H_{2^n} = H_2 (x) H_{2^{n-1}}.
inline DenseMatrix hadamard_power(std::size_t n) {
  DenseMatrix m = h2();
  for (std::size_t k = 1; k < n; ++k) m = kron(h2(), m);
  return m;
}

/// The three length-8 Walsh-Hadamard stages as printed (entries in units of
/// 1/sqrt2, '.' = 0, '-' = -1), listed left to right as in the product.
inline std::vector<DenseMatrix> printed_wh8_factors() {
  const char* rows[3][8] = {
      {"1...1...", ".1...1..", "..1...1.", "...1...1", "1...-...", ".1...-..", "..1...-.",
       "...1...-"},
      {"1.1.....", ".1.1....", "1.-.....", ".1.-....", "....1.1.", ".....1.1", "....1.-.",
       ".....1.-"},
      {"11......", "1-......", "..11....", "..1-....", "....11..", "....1-..", "......11",
       "......1-"},
  };
  std::vector<DenseMatrix> out;
  for (auto& f : rows) {
    DenseMatrix m = DenseMatrix::Zero(8, 8);
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c)
        m(r, c) = f[r][c] == '1' ? 1.0 : f[r][c] == '-' ? -1.0 : 0.0;
    out.push_back(m / std::sqrt(2.0));
  }
  return out;
}

/// Permutation matrix with column m having a 1 at row f(m).
inline DenseMatrix permutation(std::size_t d, const std::function<std::size_t(std::size_t)>& f) {
  DenseMatrix m = DenseMatrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t c = 0; c < d; ++c) m(static_cast<Eigen::Index>(f(c)), static_cast<Eigen::Index>(c)) = 1.0;
  return m;
}

/// Full-register matrix of one gate, assembled as I - P (x) I_t + P (x) M_t
/// from per-qubit 2x2 factors (most significant qubit leftmost).
inline DenseMatrix gate_matrix(const Gate& g, const Circuit& c) {
  const std::size_t n = c.n_qubits();
  const std::size_t t = c.global_index(g.target);
  std::vector<int> ctl(n, -1);  // -1 free, 0 negative, 1 positive
  for (const auto& s : g.controls)
    ctl[c.global_index(s.qubit)] = s.polarity == Polarity::positive ? 1 : 0;
  DenseMatrix proj = DenseMatrix::Ones(1, 1);
  DenseMatrix proj_m = DenseMatrix::Ones(1, 1);
  DenseMatrix m2(2, 2);
  const Matrix2 gm = g.matrix();
  m2 << gm(0, 0), gm(0, 1), gm(1, 0), gm(1, 1);
  for (std::size_t q = n; q-- > 0;) {
    DenseMatrix f = identity(2);
    if (ctl[q] >= 0) {
      f = DenseMatrix::Zero(2, 2);
      f(ctl[q], ctl[q]) = 1.0;
    }
    if (q == t) {
      proj = kron(proj, identity(2));
      proj_m = kron(proj_m, m2);
    } else {
      proj = kron(proj, f);
      proj_m = kron(proj_m, f);
    }
  }
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << n);
  return identity(d) - proj + proj_m;
}

/// Full-register matrix of a circuit (data and ancilla) by gate products.
inline DenseMatrix circuit_matrix(const Circuit& c) {
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << c.n_qubits());
  DenseMatrix m = identity(d);
  for (const auto& g : c.gates()) m = gate_matrix(g, c) * m;
  return m;
}

/// Direct formula: column 2k is alpha shifted by 2k, column 2k+1 is beta
/// shifted by 2k, taps wrapped modulo p.
inline DenseMatrix synthesis_from_taps(const std::vector<cplx>& alpha, const std::vector<cplx>& beta,
                                       std::size_t p) {
  DenseMatrix m = DenseMatrix::Zero(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(p));
  for (std::size_t k = 0; k < p / 2; ++k) {
    for (std::size_t i = 0; i < alpha.size(); ++i)
      m(static_cast<Eigen::Index>((i + 2 * k) % p), static_cast<Eigen::Index>(2 * k)) += alpha[i];
    for (std::size_t i = 0; i < beta.size(); ++i)
      m(static_cast<Eigen::Index>((i + 2 * k) % p), static_cast<Eigen::Index>(2 * k + 1)) += beta[i];
  }
  return m;
}

/// Cyclic translation e_m -> e_{m+k mod p}.
inline DenseMatrix cyclic_shift(std::size_t p, long k) {
  return permutation(p, [&](std::size_t m) {
    const long pp = static_cast<long>(p);
    return static_cast<std::size_t>(((static_cast<long>(m) + k) % pp + pp) % pp);
  });
}

/// Haar pyramid by repeated pairwise averaging/differencing in place
/// (interleaved output).
inline CVector haar_pyramid(CVector x, std::size_t depth) {
  const double r = 1.0 / std::sqrt(2.0);
  for (std::size_t j = 1; j <= depth; ++j) {
    const std::size_t stride = std::size_t{1} << (j - 1);
    for (std::size_t i = 0; i + stride < static_cast<std::size_t>(x.size()); i += 2 * stride) {
      const cplx a = x(i), b = x(i + stride);
      x(i) = r * (a + b);
      x(i + stride) = r * (a - b);
    }
  }
  return x;
}

/// Daubechies-4 lowpass in closed form, (1+s3, 3+s3, 3-s3, 1-s3)/(4 sqrt2).
inline std::vector<double> daubechies4_closed_form() {
  const double s3 = std::sqrt(3.0);
  const double d = 4 * std::sqrt(2.0);
  return {(1 + s3) / d, (3 + s3) / d, (3 - s3) / d, (1 - s3) / d};
}

inline Matrix2 random_unitary(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
  const double t = u(rng), phi = u(rng), psi = u(rng), chi = u(rng);
  Matrix2 m;
  m << std::polar(std::cos(t), psi), std::polar(std::sin(t), chi),
      -std::polar(std::sin(t), -chi), std::polar(std::cos(t), -psi);
  return m * std::polar(1.0, phi);
}

inline SplitWord random_word(std::mt19937_64& rng, std::size_t max_len = 6) {
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<int> coin(0, 2);
  SplitWord w;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) {
    const int c = coin(rng);
    if (c == 0) {
      w.steps.push_back(ShiftStep{+1});
    } else if (c == 1) {
      w.steps.push_back(ShiftStep{-1});
    } else {
      w.steps.push_back(RotationStep{random_unitary(rng)});
    }
  }
  return w;
}

inline CVector random_signal(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  CVector v(static_cast<Eigen::Index>(n));
  for (auto& x : v) x = cplx(g(rng), g(rng));
  return v;
}

}  // namespace qwt::oracle
