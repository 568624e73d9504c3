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

// Lowering to the elementary gate set {uncontrolled single-qubit gate,
// singly-controlled NOT}.
//
//  * Negative controls are conjugated with X on the control line.
//  * A doubly-controlled NOT expands into kToffoliCost elementary gates.
//  * A NOT with c >= 3 controls ANDs the controls into a chain of c - 2
//    ancillas, fires a Toffoli on the target and uncomputes the chain.
//  * Any other gate with c >= 2 controls builds a chain of c - 1 ancillas
//    and applies a singly-controlled version of the gate from the last one.
//  * A singly-controlled U uses the A X B X C construction on the ZYZ Euler
//    angles of U; controlled rotations use the shorter 4-gate form.
//
// Chain ancillas are appended after the circuit's own ancillas and are
// shared between gates since each chain is uncomputed immediately.

#include "qwt/circuit.hpp"
#include "qwt/linalg.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

namespace qwt {

/// Elementary gates in one expanded Toffoli (6 CNOT, 2 H, 7 T/T^dagger).
inline constexpr std::size_t kToffoliCost = 15;

/// Single-qubit gates closer than this to the identity are dropped when they
/// arise inside a controlled-U expansion.
inline constexpr double kIdentityDropTol = 1e-14;

struct EulerZyz {
  double phase = 0.0;  // U = e^{i phase} Rz(beta) Ry(gamma) Rz(delta)
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
};

inline Matrix2 rz_matrix(double phi) {
  Matrix2 m;
  m << std::polar(1.0, -phi / 2), 0.0, 0.0, std::polar(1.0, phi / 2);
  return m;
}

inline Matrix2 ry_matrix(double gamma) {
  const double c = std::cos(gamma / 2);
  const double s = std::sin(gamma / 2);
  Matrix2 m;
  m << c, -s, s, c;
  return m;
}

inline EulerZyz euler_zyz(const Matrix2& u) {
  EulerZyz e;
  const cplx det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
  e.phase = std::arg(det) / 2;
  const Matrix2 v = u * std::polar(1.0, -e.phase);
  const double a = std::abs(v(0, 0));
  const double b = std::abs(v(1, 0));
  e.gamma = 2 * std::atan2(b, a);
  double sum = 0.0;   // beta + delta
  double diff = 0.0;  // beta - delta
  if (a > 1e-15) sum = -2 * std::arg(v(0, 0));
  if (b > 1e-15) diff = 2 * std::arg(v(1, 0));
  e.beta = (sum + diff) / 2;
  e.delta = (sum - diff) / 2;
  return e;
}

namespace detail {

inline bool near_identity(const Matrix2& m) {
  return (m - Matrix2::Identity()).cwiseAbs().maxCoeff() <= kIdentityDropTol;
}

class Lowering {
 public:
  Lowering(Circuit& out, std::size_t chain_base)
      : out_(out), chain_base_(chain_base) {}

  std::size_t chain_used() const { return chain_used_; }

  void lower(const Gate& g) {
    std::vector<QubitRef> ctl;
    for (const auto& c : g.controls) {
      if (c.polarity == Polarity::negative) out_.add(Gate::x(c.qubit));
      ctl.push_back(c.qubit);
    }
    lower_positive(g, ctl);
    for (const auto& c : g.controls) {
      if (c.polarity == Polarity::negative) out_.add(Gate::x(c.qubit));
    }
  }

 private:
  void lower_positive(const Gate& g, const std::vector<QubitRef>& ctl) {
    Gate bare = g;
    bare.controls.clear();
    const std::size_t k = ctl.size();
    if (k == 0) {
      out_.add(bare);
      return;
    }
    if (k == 1) {
      controlled(bare, ctl[0]);
      return;
    }
    if (g.kind == GateKind::X && k == 2) {
      toffoli(ctl[0], ctl[1], g.target);
      return;
    }
    // AND the controls into the chain; X needs one link fewer because the
    // last AND is the Toffoli onto the target itself.
    const std::size_t links = g.kind == GateKind::X ? k - 2 : k - 1;
    chain_used_ = std::max(chain_used_, links);
    auto link = [&](std::size_t i) { return QubitRef::ancilla(chain_base_ + i); };

    toffoli(ctl[0], ctl[1], link(0));
    for (std::size_t i = 1; i < links; ++i) toffoli(link(i - 1), ctl[i + 1], link(i));
    if (g.kind == GateKind::X) {
      toffoli(link(links - 1), ctl[k - 1], g.target);
    } else {
      controlled(bare, link(links - 1));
    }
    for (std::size_t i = links; i-- > 1;) toffoli(link(i - 1), ctl[i + 1], link(i));
    toffoli(ctl[0], ctl[1], link(0));
  }

  void cnot(QubitRef c, QubitRef t) { out_.add(Gate::x(t, {ControlSpec::pos(c)})); }

  void single(const Matrix2& m, QubitRef t) {
    if (!near_identity(m)) out_.add(Gate::u2(m, t));
  }

  void toffoli(QubitRef a, QubitRef b, QubitRef t) {
    Matrix2 tg;
    tg << 1.0, 0.0, 0.0, std::polar(1.0, std::numbers::pi / 4);
    const Matrix2 tdg = tg.adjoint();
    out_.add(Gate::h(t));
    cnot(b, t);
    out_.add(Gate::u2(tdg, t));
    cnot(a, t);
    out_.add(Gate::u2(tg, t));
    cnot(b, t);
    out_.add(Gate::u2(tdg, t));
    cnot(a, t);
    out_.add(Gate::u2(tg, b));
    out_.add(Gate::u2(tg, t));
    out_.add(Gate::h(t));
    cnot(a, b);
    out_.add(Gate::u2(tg, a));
    out_.add(Gate::u2(tdg, b));
    cnot(a, b);
  }

  // Singly-controlled version of an uncontrolled gate.
  void controlled(const Gate& g, QubitRef c) {
    const QubitRef t = g.target;
    if (g.kind == GateKind::X) {
      cnot(c, t);
      return;
    }
    if (g.kind == GateKind::Rot) {
      // X R(phi) X = R(-phi), so R(t/2) . X R(-t/2) X = R(t) when c = 1.
      out_.add(Gate::rot(g.theta / 2, t));
      cnot(c, t);
      out_.add(Gate::rot(-g.theta / 2, t));
      cnot(c, t);
      return;
    }
    const EulerZyz e = euler_zyz(g.matrix());
    const Matrix2 a = rz_matrix(e.beta) * ry_matrix(e.gamma / 2);
    const Matrix2 b = ry_matrix(-e.gamma / 2) * rz_matrix(-(e.delta + e.beta) / 2);
    const Matrix2 cm = rz_matrix((e.delta - e.beta) / 2);
    single(cm, t);
    cnot(c, t);
    single(b, t);
    cnot(c, t);
    single(a, t);
    Matrix2 phase;
    phase << 1.0, 0.0, 0.0, std::polar(1.0, e.phase);
    single(phase, c);
  }

  Circuit& out_;
  std::size_t chain_base_;
  std::size_t chain_used_ = 0;
};

}  // namespace detail

/// Rewrites c over the elementary gate set. The result acts on the data
/// qubits exactly like c (with all ancillas entering and leaving in |0>);
/// extra chain ancillas are appended after c's own.
inline Circuit decompose_to_elementary(const Circuit& c) {
  require_valid(c);
  Circuit out(c.n_data(), c.n_ancilla());
  detail::Lowering lowering(out, c.n_ancilla());
  for (const auto& g : c.gates()) lowering.lower(g);
  out.require_ancilla(c.n_ancilla() + lowering.chain_used());
  return out;
}

inline bool is_elementary(const Gate& g) {
  if (g.controls.empty()) return true;
  return g.kind == GateKind::X && g.controls.size() == 1 &&
         g.controls[0].polarity == Polarity::positive;
}

/// Logical gate statistics plus the size after lowering.
struct GateCountReport {
  // counts[kind][bucket], bucket = number of controls clamped to 3 ("3+").
  std::array<std::array<std::size_t, 4>, 4> counts{};
  std::size_t total = 0;
  std::size_t elementary_total = 0;
  // Multi-controlled NOTs onto ancillas, split by whether the ancilla was
  // believed clean (compute) or dirty (uncompute) when the gate fired.
  std::size_t ancilla_compute = 0;
  std::size_t ancilla_uncompute = 0;

  std::size_t count(GateKind k, std::size_t controls) const {
    return counts[static_cast<std::size_t>(k)][std::min<std::size_t>(controls, 3)];
  }
  std::size_t count_kind(GateKind k) const {
    std::size_t s = 0;
    for (auto v : counts[static_cast<std::size_t>(k)]) s += v;
    return s;
  }
  std::size_t toffoli() const { return count(GateKind::X, 2); }
  std::size_t cnot() const { return count(GateKind::X, 1); }
};

inline GateCountReport count_gates(const Circuit& c) {
  require_valid(c);
  GateCountReport r;
  std::vector<bool> dirty(c.n_ancilla(), false);
  for (const auto& g : c.gates()) {
    ++r.counts[static_cast<std::size_t>(g.kind)]
              [std::min<std::size_t>(g.controls.size(), 3)];
    if (g.kind == GateKind::X && g.controls.size() >= 2 && g.target.is_ancilla()) {
      const std::size_t a = g.target.index;
      if (dirty[a]) {
        ++r.ancilla_uncompute;
      } else {
        ++r.ancilla_compute;
      }
      dirty[a] = !dirty[a];
    }
  }
  r.total = c.size();
  r.elementary_total = decompose_to_elementary(c).size();
  return r;
}

}  // namespace qwt
