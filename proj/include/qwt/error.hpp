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

#include <stdexcept>
#include <string>

namespace qwt {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A circuit violates the structural invariants checked by validate().
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Operand sizes do not agree (register widths, state lengths, windows).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A builder was asked for a circuit it cannot produce.
class BuildError : public Error {
 public:
  using Error::Error;
};

/// Raised by build_increment_mod when the modulus is a power of two; the
/// caller should use build_increment_pow2 instead.
class PowerOfTwoModulus : public BuildError {
 public:
  using BuildError::BuildError;
};

/// Dense extraction requested for more data qubits than supported.
class TooManyQubits : public Error {
 public:
  using Error::Error;
};

/// An ancilla qubit was left outside |0> after the circuit ran.
class AncillaNotRestored : public Error {
 public:
  AncillaNotRestored(const std::string& what, std::size_t column)
      : Error(what), column_(column) {}
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// Malformed text input (circuit files, signal CSV, filter files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Filter pair is not a QMF system or cannot be peeled into rotations.
class FactorizationError : public Error {
 public:
  using Error::Error;
};

}  // namespace qwt
