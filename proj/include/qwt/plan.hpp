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

#include "qwt/error.hpp"
#include "qwt/linalg.hpp"

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace qwt {

/// Local rotation I_N (x) M on adjacent (even, odd) index pairs.
struct RotationStep {
  Matrix2 matrix = Matrix2::Identity();
};

/// Cyclic translation e_n -> e_{n + direction}, direction = +1 or -1.
struct ShiftStep {
  int direction = +1;
};

using SplitStep = std::variant<RotationStep, ShiftStep>;

inline SplitStep rotation_step(const Matrix2& m) { return RotationStep{m}; }
inline SplitStep shift_step(int direction) { return ShiftStep{direction}; }

/// Steps of a splitting operator in synthesis order: the first step is
/// applied to the signal first. Every step commutes with the even
/// translations, so any word defines a QMF system.
struct SplitWord {
  std::vector<SplitStep> steps;

  std::size_t size() const { return steps.size(); }
  bool empty() const { return steps.empty(); }
};

inline void validate_word(const SplitWord& w) {
  if (w.empty()) throw BuildError("split word is empty");
  for (const auto& s : w.steps) {
    if (const auto* r = std::get_if<RotationStep>(&s)) {
      if (!is_unitary(r->matrix)) throw BuildError("split word rotation is not unitary");
    } else if (const auto d = std::get<ShiftStep>(s).direction; d != 1 && d != -1) {
      throw BuildError("shift direction must be +1 or -1");
    }
  }
}

enum class TransformKind { packet, pyramid };
enum class Ordering { interleaved, subband };

/// Shape of a multi-level transform on signals of period `length`.
struct TransformPlan {
  TransformKind kind = TransformKind::packet;
  std::size_t depth = 1;
  std::size_t length = 2;
  Ordering ordering = Ordering::interleaved;

  std::size_t n_qubits() const { return ceil_log2(length); }

  /// Period of the sequence split at level j (1-based).
  std::size_t level_length(std::size_t j) const { return length >> (j - 1); }

  void validate() const {
    if (length < 2 || length % 2 != 0) {
      throw BuildError("transform length must be even and >= 2, got " +
                       std::to_string(length));
    }
    if (depth < 1) throw BuildError("transform depth must be >= 1");
    const std::size_t max_depth = two_adic_valuation(length);
    if (depth > max_depth) {
      throw BuildError("depth " + std::to_string(depth) + " exceeds the 2-adic bound " +
                       std::to_string(max_depth) + " for length " +
                       std::to_string(length));
    }
  }
};

/// Contiguous run of data qubits [lo, lo + width); qubit lo is the window's
/// least significant bit.
struct Window {
  std::size_t lo = 0;
  std::size_t width = 0;

  std::size_t hi() const { return lo + width; }
  bool contains(std::size_t q) const { return q >= lo && q < hi(); }
};

}  // namespace qwt
