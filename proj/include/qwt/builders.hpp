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

// Circuit constructors for Walsh-Hadamard transforms, cyclic increments,
// local rotations, splitting steps and full packet / pyramid transforms.

#include "qwt/circuit.hpp"
#include "qwt/error.hpp"
#include "qwt/linalg.hpp"
#include "qwt/plan.hpp"

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>

namespace qwt {

/// How external controls are attached to an increment.
enum class Conditioning {
  /// Only the gates targeting c1, a1 and a0 are conditioned. With c1 held at
  /// zero no carry ripples, so the higher bits stay fixed.
  targeted,
  /// Every gate is conditioned.
  every_gate,
};

namespace detail {

inline void check_window(std::size_t n_data, Window w, const Controls& controls) {
  if (w.width == 0) throw BuildError("window width must be >= 1");
  if (w.hi() > n_data) {
    throw BuildError("window [" + std::to_string(w.lo) + ", " + std::to_string(w.hi()) +
                     ") exceeds " + std::to_string(n_data) + " data qubits");
  }
  for (const auto& c : controls) {
    if (!c.qubit.is_ancilla() && w.contains(c.qubit.index)) {
      throw BuildError("control " + describe(c.qubit) + " overlaps the window");
    }
  }
}

// One past the highest ancilla index used as a control.
inline std::size_t ancilla_extent(const Controls& controls) {
  std::size_t n = 0;
  for (const auto& c : controls) {
    if (c.qubit.is_ancilla()) n = std::max(n, c.qubit.index + 1);
  }
  return n;
}

// Rejects ancilla controls that would alias the builder's own scratch qubits.
inline void check_scratch(const Controls& controls, std::size_t scratch) {
  for (const auto& c : controls) {
    if (c.qubit.is_ancilla() && c.qubit.index < scratch) {
      throw BuildError("control " + describe(c.qubit) + " collides with scratch ancillas");
    }
  }
}

}  // namespace detail

/// H on qubits 0, 1, ..., n-1 in that order.
inline Circuit build_walsh_hadamard(std::size_t n) {
  if (n == 0) throw BuildError("walsh-hadamard needs at least one qubit");
  Circuit c(n);
  for (std::size_t q = 0; q < n; ++q) c.add(Gate::h(QubitRef::data(q)));
  return c;
}

/// |m> -> |m + 1 mod 2^w> on the window, optionally conditioned.
///
/// Carries c_1 = a_1 a_0, c_i = a_i c_{i-1} live in ancillas 0..w-3. The
/// high bits are then updated most significant first, each carry being
/// uncomputed right after its last use while the bits it depends on still
/// hold their input values; finally a_1 ^= a_0 and a_0 ^= 1.
inline Circuit build_increment_pow2(std::size_t n_data, Window win,
                                    const Controls& controls = {},
                                    Conditioning mode = Conditioning::targeted) {
  detail::check_window(n_data, win, controls);
  const std::size_t w = win.width;
  const std::size_t scratch = w >= 3 ? w - 2 : 0;
  detail::check_scratch(controls, scratch);
  Circuit c(n_data, std::max(scratch, detail::ancilla_extent(controls)));
  auto a = [&](std::size_t i) { return QubitRef::data(win.lo + i); };
  auto carry = [&](std::size_t i) { return QubitRef::ancilla(i - 1); };  // c_i, i >= 1
  const Controls none;
  const Controls& rest = mode == Conditioning::every_gate ? controls : none;
  auto pos = [](QubitRef q) { return ControlSpec::pos(q); };

  if (w >= 3) {
    c.add(Gate::x(carry(1), concat({pos(a(1)), pos(a(0))}, controls)));
    for (std::size_t i = 2; i + 1 < w; ++i) {
      c.add(Gate::x(carry(i), concat({pos(a(i)), pos(carry(i - 1))}, rest)));
    }
    for (std::size_t i = w - 1; i >= 2; --i) {
      c.add(Gate::x(a(i), concat({pos(carry(i - 1))}, rest)));
      if (i - 1 >= 2) {
        c.add(Gate::x(carry(i - 1), concat({pos(a(i - 1)), pos(carry(i - 2))}, rest)));
      } else {
        c.add(Gate::x(carry(1), concat({pos(a(1)), pos(a(0))}, controls)));
      }
    }
  }
  if (w >= 2) c.add(Gate::x(a(1), concat({pos(a(0))}, controls)));
  c.add(Gate::x(a(0), controls));
  return c;
}

/// Increment on the whole n-qubit register.
inline Circuit build_increment_pow2(std::size_t n) {
  return build_increment_pow2(n, Window{0, n});
}

inline Circuit build_decrement_pow2(std::size_t n_data, Window win,
                                    const Controls& controls = {},
                                    Conditioning mode = Conditioning::targeted) {
  return invert(build_increment_pow2(n_data, win, controls, mode));
}

/// |m> -> |m + 1 mod modulus> for 0 <= m < modulus, modulus even and not a
/// power of two. Runs the 2^w increment, then flags the value `modulus` in
/// an exception ancilla, clears the 1-bits of `modulus` under that flag and
/// unflags by detecting 0. Inputs >= modulus are outside the contract.
inline Circuit build_increment_mod(std::size_t modulus, std::size_t n_data, Window win,
                                   const Controls& controls = {},
                                   Conditioning mode = Conditioning::targeted) {
  if (modulus % 2 != 0) throw BuildError("modulus must be even");
  if (modulus < 4) throw BuildError("modulus must be >= 4");
  if (is_pow2(modulus)) {
    throw PowerOfTwoModulus("modulus " + std::to_string(modulus) +
                            " is a power of two; use build_increment_pow2");
  }
  if (win.width != ceil_log2(modulus)) {
    throw BuildError("window width " + std::to_string(win.width) + " does not match modulus " +
                     std::to_string(modulus));
  }
  detail::check_scratch(controls, 1);
  Circuit c = build_increment_pow2(n_data, win, controls, mode);
  const Controls& rest = mode == Conditioning::every_gate ? controls : Controls{};
  // The carries are clean again here, so the flag reuses ancilla 0.
  const QubitRef flag = QubitRef::ancilla(0);
  c.require_ancilla(1);

  Controls match_modulus;
  Controls match_zero;
  for (std::size_t i = 0; i < win.width; ++i) {
    const QubitRef q = QubitRef::data(win.lo + i);
    match_modulus.push_back(((modulus >> i) & 1U) ? ControlSpec::pos(q) : ControlSpec::neg(q));
    match_zero.push_back(ControlSpec::neg(q));
  }
  c.add(Gate::x(flag, concat(match_modulus, rest)));
  for (std::size_t i = 0; i < win.width; ++i) {
    if ((modulus >> i) & 1U) {
      c.add(Gate::x(QubitRef::data(win.lo + i), concat({ControlSpec::pos(flag)}, rest)));
    }
  }
  // A window left at 0 by a failed condition must not raise the flag, so
  // this gate always carries the external controls.
  c.add(Gate::x(flag, concat(match_zero, controls)));
  return c;
}

/// Cyclic +-1 translation of period `modulus` on a window of matching width.
inline Circuit build_translation(int direction, std::size_t modulus, std::size_t n_data,
                                 Window win, const Controls& controls = {},
                                 Conditioning mode = Conditioning::targeted) {
  if (modulus < 2 || modulus % 2 != 0) throw BuildError("modulus must be even and >= 2");
  if (win.width != ceil_log2(modulus)) {
    throw BuildError("window width " + std::to_string(win.width) + " does not match modulus " +
                     std::to_string(modulus));
  }
  Circuit inc = is_pow2(modulus) ? build_increment_pow2(n_data, win, controls, mode)
                                 : build_increment_mod(modulus, n_data, win, controls, mode);
  return direction > 0 ? inc : invert(inc);
}

/// One gate on the window's least significant qubit: I (x) ... (x) I (x) M.
/// X, H and real rotations are emitted as their named kinds.
inline Circuit build_local_rotation(const Matrix2& m, std::size_t n_data, Window win,
                                    const Controls& controls = {}) {
  if (!is_unitary(m)) throw BuildError("local rotation matrix is not unitary");
  detail::check_window(n_data, win, controls);
  constexpr double tol = 1e-14;
  auto near = [&](const Matrix2& r) { return (m - r).cwiseAbs().maxCoeff() <= tol; };
  const QubitRef t = QubitRef::data(win.lo);
  Circuit c(n_data, detail::ancilla_extent(controls));
  if (near(pauli_x_matrix())) {
    c.add(Gate::x(t, controls));
  } else if (near(hadamard_matrix())) {
    c.add(Gate::h(t, controls));
  } else if (const double theta = std::atan2(m(0, 1).real(), m(0, 0).real());
             near(rotation_matrix(theta))) {
    c.add(Gate::rot(theta, t, controls));
  } else {
    c.add(Gate::u2(m, t, controls));
  }
  return c;
}

/// Circuit for the synthesis operator of `word` at period `modulus`.
inline Circuit build_split_synthesis(const SplitWord& word, std::size_t modulus,
                                     std::size_t n_data, Window win,
                                     const Controls& controls = {},
                                     Conditioning mode = Conditioning::targeted) {
  validate_word(word);
  if (modulus < 2 || modulus % 2 != 0) throw BuildError("modulus must be even and >= 2");
  if (win.width != ceil_log2(modulus)) {
    throw BuildError("window width " + std::to_string(win.width) + " does not fit modulus " +
                     std::to_string(modulus));
  }
  detail::check_window(n_data, win, controls);
  Circuit c(n_data);
  for (const auto& step : word.steps) {
    if (const auto* r = std::get_if<RotationStep>(&step)) {
      c = compose(c, build_local_rotation(r->matrix, n_data, win, controls));
    } else {
      const int dir = std::get<ShiftStep>(step).direction;
      c = compose(c, build_translation(dir, modulus, n_data, win, controls, mode));
    }
  }
  return c;
}

/// Adjoint of the synthesis circuit: computes (approximation, detail)
/// coefficients at (even, odd) positions of the window.
inline Circuit build_split_analysis(const SplitWord& word, std::size_t modulus,
                                    std::size_t n_data, Window win,
                                    const Controls& controls = {},
                                    Conditioning mode = Conditioning::targeted) {
  return invert(build_split_synthesis(word, modulus, n_data, win, controls, mode));
}

/// How pyramid levels j >= 2 are restricted to the approximation subspace.
enum class LevelConditioning {
  /// Every gate of the split carries the negative controls on qubits
  /// 0..j-2 (increments use their own Conditioning mode).
  per_gate,
  /// The condition is computed once into a flag ancilla; the split is then
  /// conditioned on the flag alone and the flag is uncomputed.
  flag,
};

/// Level j (1-based) splits period length/2^(j-1) on qubits [j-1, n). The
/// pyramid conditions levels j >= 2 on qubits 0..j-2 being |0>, which is
/// where the approximation coefficients of the previous level sit.
/// The circuit always yields interleaved ordering.
inline Circuit build_transform(const TransformPlan& plan, const SplitWord& word,
                               Conditioning mode = Conditioning::targeted,
                               LevelConditioning level = LevelConditioning::per_gate) {
  plan.validate();
  validate_word(word);
  const std::size_t n = plan.n_qubits();
  Circuit c(n);
  Controls low;
  for (std::size_t j = 1; j <= plan.depth; ++j) {
    const Window win{j - 1, n - (j - 1)};
    const std::size_t len = plan.level_length(j);
    if (plan.kind == TransformKind::packet || j == 1) {
      c = compose(c, build_split_analysis(word, len, n, win, {}, mode));
      continue;
    }
    low.push_back(ControlSpec::neg(QubitRef::data(j - 2)));
    if (level == LevelConditioning::per_gate) {
      c = compose(c, build_split_analysis(word, len, n, win, low, mode));
      continue;
    }
    const std::size_t scratch = build_split_analysis(word, len, n, win).n_ancilla();
    const QubitRef flag = QubitRef::ancilla(scratch);
    Circuit mark(n, scratch + 1);
    mark.add(Gate::x(flag, low));
    c = compose(c, mark);
    c = compose(c, build_split_analysis(word, len, n, win, {ControlSpec::pos(flag)}, mode));
    c = compose(c, mark);
  }
  return c;
}

/// Lattice word [R(t1), D, R(t2), D, ..., R(tK)] (+ optional trailing
/// rotation), where the delay D = [Shift(+1), Rot(X)] fixes e_{2k} and sends
/// e_{2k+1} to e_{2k+3}.
inline SplitWord lattice_to_word(std::span<const double> angles,
                                 std::optional<Matrix2> parity_fix = std::nullopt) {
  if (angles.empty()) throw BuildError("lattice needs at least one angle");
  SplitWord w;
  for (std::size_t k = 0; k < angles.size(); ++k) {
    if (k > 0) {
      w.steps.push_back(shift_step(+1));
      w.steps.push_back(rotation_step(pauli_x_matrix()));
    }
    w.steps.push_back(rotation_step(rotation_matrix(angles[k])));
  }
  if (parity_fix) w.steps.push_back(rotation_step(*parity_fix));
  return w;
}

}  // namespace qwt
