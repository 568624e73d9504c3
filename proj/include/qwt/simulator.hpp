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

#include "qwt/circuit.hpp"
#include "qwt/error.hpp"
#include "qwt/linalg.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

namespace qwt {

/// Dense amplitudes over n_qubits; index m has bit i equal to qubit i.
struct StateVector {
  std::size_t n_qubits = 0;
  CVector amplitudes;

  StateVector() = default;
  StateVector(std::size_t n, CVector amps) : n_qubits(n), amplitudes(std::move(amps)) {
    if (amplitudes.size() != (Eigen::Index{1} << n)) {
      throw DimensionError("state length " + std::to_string(amplitudes.size()) +
                           " is not 2^" + std::to_string(n));
    }
  }

  /// The all-zero vector (not the state |0...0>).
  static StateVector zero(std::size_t n) {
    return StateVector(n, CVector::Zero(Eigen::Index{1} << n));
  }
  static StateVector basis(std::size_t n, std::size_t m) {
    StateVector s = zero(n);
    s.amplitudes(static_cast<Eigen::Index>(m)) = 1.0;
    return s;
  }
  /// Embeds a data-register vector with all ancillas in |0>.
  static StateVector embed(const CVector& data, std::size_t n_data, std::size_t n_ancilla) {
    if (data.size() != (Eigen::Index{1} << n_data)) {
      throw DimensionError("signal length " + std::to_string(data.size()) +
                           " is not 2^" + std::to_string(n_data));
    }
    StateVector s = zero(n_data + n_ancilla);
    s.amplitudes.head(data.size()) = data;
    return s;
  }

  double norm() const { return amplitudes.norm(); }
};

namespace detail {

inline void apply_gate(CVector& amps, const Circuit& c, const Gate& g) {
  const std::uint64_t tbit = std::uint64_t{1} << c.global_index(g.target);
  std::uint64_t cmask = 0;
  std::uint64_t cval = 0;
  for (const auto& ctl : g.controls) {
    const std::uint64_t b = std::uint64_t{1} << c.global_index(ctl.qubit);
    cmask |= b;
    if (ctl.polarity == Polarity::positive) cval |= b;
  }
  const auto dim = static_cast<std::uint64_t>(amps.size());
  if (g.kind == GateKind::X) {
    for (std::uint64_t i = 0; i < dim; ++i) {
      if ((i & tbit) || (i & cmask) != cval) continue;
      std::swap(amps(static_cast<Eigen::Index>(i)), amps(static_cast<Eigen::Index>(i | tbit)));
    }
    return;
  }
  const Matrix2 m = g.matrix();
  for (std::uint64_t i = 0; i < dim; ++i) {
    if ((i & tbit) || (i & cmask) != cval) continue;
    auto& a0 = amps(static_cast<Eigen::Index>(i));
    auto& a1 = amps(static_cast<Eigen::Index>(i | tbit));
    const cplx v0 = a0;
    const cplx v1 = a1;
    a0 = m(0, 0) * v0 + m(0, 1) * v1;
    a1 = m(1, 0) * v0 + m(1, 1) * v1;
  }
}

}  // namespace detail

/// Runs the gates of c in order on s (left multiplication by each gate).
inline StateVector apply_circuit(StateVector s, const Circuit& c) {
  if (s.n_qubits != c.n_qubits()) {
    throw DimensionError("state has " + std::to_string(s.n_qubits) +
                         " qubits, circuit needs " + std::to_string(c.n_qubits()));
  }
  require_valid(c);
  for (const auto& g : c.gates()) detail::apply_gate(s.amplitudes, c, g);
  return s;
}

inline constexpr double kAncillaLeakTol = 1e-10;
inline constexpr std::size_t kMaxExtractQubits = 10;

/// Runs c on a data vector (ancillas in |0>) and returns the data part of the
/// result. Throws AncillaNotRestored if amplitude leaks into any ancilla
/// state, or, with `subspace`, onto data indices >= subspace.
inline CVector run_on_data(const Circuit& c, const CVector& data,
                           std::optional<std::size_t> subspace = std::nullopt,
                           std::size_t column = 0) {
  const StateVector out =
      apply_circuit(StateVector::embed(data, c.n_data(), c.n_ancilla()), c);
  const Eigen::Index dim = Eigen::Index{1} << c.n_data();
  const Eigen::Index keep = subspace ? static_cast<Eigen::Index>(*subspace) : dim;
  const double scale = std::max(1.0, data.norm());
  const auto& amps = out.amplitudes;
  double leak = 0.0;
  if (amps.size() > dim) leak = amps.tail(amps.size() - dim).cwiseAbs().maxCoeff();
  if (keep < dim) leak = std::max(leak, amps.segment(keep, dim - keep).cwiseAbs().maxCoeff());
  if (leak > kAncillaLeakTol * scale) {
    throw AncillaNotRestored("amplitude " + std::to_string(leak) +
                                 " left outside the data subspace (column " +
                                 std::to_string(column) + ")",
                             column);
  }
  CVector result = amps.head(dim);
  if (keep < dim) result.tail(dim - keep).setZero();
  return result;
}

/// Column m of the result is the circuit applied to |m>. With `subspace`
/// only basis states 0..subspace-1 are used and a subspace x subspace block
/// is returned (general-modulus circuits are specified only there).
inline DenseMatrix extract_matrix(const Circuit& c,
                                  std::optional<std::size_t> subspace = std::nullopt) {
  if (c.n_data() > kMaxExtractQubits) {
    throw TooManyQubits("extract_matrix supports at most " +
                        std::to_string(kMaxExtractQubits) + " data qubits, got " +
                        std::to_string(c.n_data()));
  }
  const std::size_t dim = std::size_t{1} << c.n_data();
  const std::size_t d = subspace ? *subspace : dim;
  if (d > dim) throw DimensionError("subspace larger than the data register");
  require_valid(c);
  DenseMatrix m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t col = 0; col < d; ++col) {
    CVector e = CVector::Zero(static_cast<Eigen::Index>(dim));
    e(static_cast<Eigen::Index>(col)) = 1.0;
    const CVector out = run_on_data(c, e, subspace, col);
    m.col(static_cast<Eigen::Index>(col)) = out.head(static_cast<Eigen::Index>(d));
  }
  return m;
}

}  // namespace qwt
