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

/**
 * Gate-level intermediate representation.
 *
 * A Circuit owns an ordered list of single-target gates over a register of
 * data qubits followed by ancilla qubits. Qubit 0 is the least significant
 * data bit; ancilla k sits at global position n_data + k. Gates apply in list
 * order, so the circuit matrix is G_last * ... * G_first.
 *
 * Ancillas are assumed to enter in |0> and every builder in this library
 * returns them to |0>.
 */

#include "qwt/error.hpp"
#include "qwt/linalg.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qwt {

enum class QubitRole : std::uint8_t { data, ancilla };

struct QubitRef {
  QubitRole role = QubitRole::data;
  std::size_t index = 0;

  static constexpr QubitRef data(std::size_t i) { return {QubitRole::data, i}; }
  static constexpr QubitRef ancilla(std::size_t i) {
    return {QubitRole::ancilla, i};
  }
  constexpr bool is_ancilla() const { return role == QubitRole::ancilla; }

  friend constexpr bool operator==(const QubitRef&, const QubitRef&) = default;
};

enum class Polarity : std::uint8_t { positive, negative };

/// A control line. Negative polarity fires when the qubit is |0>.
struct ControlSpec {
  QubitRef qubit;
  Polarity polarity = Polarity::positive;

  static constexpr ControlSpec pos(QubitRef q) { return {q, Polarity::positive}; }
  static constexpr ControlSpec neg(QubitRef q) { return {q, Polarity::negative}; }

  friend constexpr bool operator==(const ControlSpec&,
                                   const ControlSpec&) = default;
};

using Controls = std::vector<ControlSpec>;

inline Controls concat(Controls a, const Controls& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

enum class GateKind : std::uint8_t { X, H, Rot, U2 };

inline const char* kind_name(GateKind k) {
  switch (k) {
    case GateKind::X: return "X";
    case GateKind::H: return "H";
    case GateKind::Rot: return "R";
    case GateKind::U2: return "U2";
  }
  return "?";
}

/// Single-target gate with an arbitrary list of controls.
///
/// Rot(theta) is the real rotation [[cos, sin], [-sin, cos]]; U2 carries an
/// explicit 2x2 matrix. Construction does not check unitarity, validate()
/// does.
struct Gate {
  GateKind kind = GateKind::X;
  double theta = 0.0;
  Matrix2 unitary = Matrix2::Identity();
  QubitRef target;
  Controls controls;

  static Gate x(QubitRef t, Controls c = {}) {
    return Gate{GateKind::X, 0.0, Matrix2::Identity(), t, std::move(c)};
  }
  static Gate h(QubitRef t, Controls c = {}) {
    return Gate{GateKind::H, 0.0, Matrix2::Identity(), t, std::move(c)};
  }
  static Gate rot(double theta, QubitRef t, Controls c = {}) {
    return Gate{GateKind::Rot, theta, Matrix2::Identity(), t, std::move(c)};
  }
  static Gate u2(const Matrix2& m, QubitRef t, Controls c = {}) {
    return Gate{GateKind::U2, 0.0, m, t, std::move(c)};
  }

  Matrix2 matrix() const {
    switch (kind) {
      case GateKind::X: return pauli_x_matrix();
      case GateKind::H: return hadamard_matrix();
      case GateKind::Rot: return rotation_matrix(theta);
      case GateKind::U2: return unitary;
    }
    return unitary;
  }

  Gate adjoint() const {
    Gate g = *this;
    if (kind == GateKind::Rot) g.theta = -theta;
    if (kind == GateKind::U2) g.unitary = unitary.adjoint();
    return g;
  }

  Gate with_extra_controls(const Controls& extra) const {
    Gate g = *this;
    g.controls = concat(std::move(g.controls), extra);
    return g;
  }

  std::size_t num_controls() const { return controls.size(); }

  bool operator==(const Gate& o) const {
    return kind == o.kind && theta == o.theta && target == o.target &&
           controls == o.controls && unitary == o.unitary;
  }
};

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t n_data, std::size_t n_ancilla = 0)
      : n_data_(n_data), n_ancilla_(n_ancilla) {}

  std::size_t n_data() const { return n_data_; }
  std::size_t n_ancilla() const { return n_ancilla_; }
  std::size_t n_qubits() const { return n_data_ + n_ancilla_; }

  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  Circuit& add(Gate g) {
    gates_.push_back(std::move(g));
    return *this;
  }

  /// Grows the ancilla register to at least n qubits.
  Circuit& require_ancilla(std::size_t n) {
    n_ancilla_ = std::max(n_ancilla_, n);
    return *this;
  }

  /// Position of q in the combined data+ancilla register.
  std::size_t global_index(QubitRef q) const {
    return q.is_ancilla() ? n_data_ + q.index : q.index;
  }

  bool operator==(const Circuit&) const = default;

 private:
  std::size_t n_data_ = 0;
  std::size_t n_ancilla_ = 0;
  std::vector<Gate> gates_;
};

struct Violation {
  std::size_t gate_index;
  std::string message;
};

inline bool in_range(const Circuit& c, QubitRef q) {
  return q.is_ancilla() ? q.index < c.n_ancilla() : q.index < c.n_data();
}

inline std::string describe(QubitRef q) {
  return (q.is_ancilla() ? "a" : "") + std::to_string(q.index);
}

/// Lists every invariant breach; an empty result means the circuit is valid.
inline std::vector<Violation> validate(const Circuit& c) {
  std::vector<Violation> out;
  for (std::size_t i = 0; i < c.gates().size(); ++i) {
    const Gate& g = c.gates()[i];
    if (!in_range(c, g.target)) {
      out.push_back({i, "target " + describe(g.target) + " out of range"});
    }
    for (std::size_t k = 0; k < g.controls.size(); ++k) {
      const QubitRef q = g.controls[k].qubit;
      if (!in_range(c, q)) {
        out.push_back({i, "control " + describe(q) + " out of range"});
      }
      if (q == g.target) out.push_back({i, "target in controls"});
      for (std::size_t l = 0; l < k; ++l) {
        if (g.controls[l].qubit == q) {
          out.push_back({i, "duplicate control " + describe(q)});
        }
      }
    }
    if (g.kind == GateKind::Rot && !std::isfinite(g.theta)) {
      out.push_back({i, "non-finite rotation angle"});
    }
    if (g.kind == GateKind::U2 && !is_unitary(g.unitary)) {
      out.push_back({i, "non-unitary"});
    }
  }
  return out;
}

inline void require_valid(const Circuit& c) {
  const auto report = validate(c);
  if (report.empty()) return;
  std::string msg = "invalid circuit:";
  for (const auto& v : report) {
    msg += " [gate " + std::to_string(v.gate_index) + ": " + v.message + "]";
  }
  throw ValidationError(msg);
}

/// Reverses gate order and replaces each gate by its adjoint.
inline Circuit invert(const Circuit& c) {
  require_valid(c);
  Circuit out(c.n_data(), c.n_ancilla());
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
    out.add(it->adjoint());
  }
  return out;
}

/// Applies a, then b. Ancilla registers are shared (both rely on the
/// restored-to-zero contract), so the result carries the larger of the two.
inline Circuit compose(const Circuit& a, const Circuit& b) {
  if (a.n_data() != b.n_data()) {
    throw DimensionError("compose: data widths differ (" +
                         std::to_string(a.n_data()) + " vs " +
                         std::to_string(b.n_data()) + ")");
  }
  Circuit out(a.n_data(), std::max(a.n_ancilla(), b.n_ancilla()));
  for (const auto& g : a.gates()) out.add(g);
  for (const auto& g : b.gates()) out.add(g);
  return out;
}

}  // namespace qwt
