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

#include "oracles.hpp"
#include "qwt/builders.hpp"
#include "qwt/simulator.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace qwt;

namespace {
QubitRef d(std::size_t i) { return QubitRef::data(i); }
}  // namespace

TEST(Simulator, HadamardOnZero) {
  Circuit c(2);
  c.add(Gate::h(d(0)));
  const auto s = apply_circuit(StateVector::basis(2, 0), c);
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(s.amplitudes(0).real(), r, 1e-15);
  EXPECT_NEAR(s.amplitudes(1).real(), r, 1e-15);
  EXPECT_EQ(s.amplitudes(2), cplx(0));
  EXPECT_EQ(s.amplitudes(3), cplx(0));
}

TEST(Simulator, ControlledNot) {
  Circuit c(2);
  c.add(Gate::x(d(0), {ControlSpec::pos(d(1))}));
  // |10> is index 2 (qubit 1 set); the CNOT flips qubit 0.
  const auto s = apply_circuit(StateVector::basis(2, 2), c);
  EXPECT_EQ(s.amplitudes(3), cplx(1));
  const auto t = apply_circuit(StateVector::basis(2, 0), c);
  EXPECT_EQ(t.amplitudes(0), cplx(1));
}

TEST(Simulator, NegativeControl) {
  Circuit c(2);
  c.add(Gate::x(d(0), {ControlSpec::neg(d(1))}));
  EXPECT_EQ(apply_circuit(StateVector::basis(2, 0), c).amplitudes(1), cplx(1));
  EXPECT_EQ(apply_circuit(StateVector::basis(2, 2), c).amplitudes(2), cplx(1));
}

TEST(Simulator, ExtractSmallMatrices) {
  Circuit h(1);
  h.add(Gate::h(d(0)));
  EXPECT_LE(max_abs_diff(extract_matrix(h), oracle::h2()), 1e-15);

  EXPECT_LE(max_abs_diff(extract_matrix(Circuit(2)), oracle::identity(4)), 0.0);

  Circuit ih(2);
  ih.add(Gate::h(d(0)));
  EXPECT_LE(max_abs_diff(extract_matrix(ih), oracle::kron(oracle::identity(2), oracle::h2())), 1e-15);
}

TEST(Simulator, AgreesWithKroneckerReference) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> kind(0, 3);
  for (std::size_t n = 1; n <= 5; ++n) {
    Circuit c(n);
    std::uniform_int_distribution<std::size_t> q(0, n - 1);
    for (int i = 0; i < 20; ++i) {
      const std::size_t t = q(rng);
      Controls ctl;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != t && rng() % 3 == 0) {
          ctl.push_back(rng() % 2 ? ControlSpec::pos(d(j)) : ControlSpec::neg(d(j)));
        }
      }
      switch (kind(rng)) {
        case 0: c.add(Gate::x(d(t), ctl)); break;
        case 1: c.add(Gate::h(d(t), ctl)); break;
        case 2: c.add(Gate::rot(0.3 * i, d(t), ctl)); break;
        default: c.add(Gate::u2(oracle::random_unitary(rng), d(t), ctl)); break;
      }
    }
    const DenseMatrix m = extract_matrix(c);
    EXPECT_LE(max_abs_diff(m, oracle::circuit_matrix(c)), 1e-12) << "n=" << n;
    EXPECT_LE(max_abs_diff(m.adjoint() * m, oracle::identity(m.rows())), 1e-12);

    const CVector x = oracle::random_signal(rng, std::size_t{1} << n);
    const CVector y = oracle::random_signal(rng, std::size_t{1} << n);
    const cplx a(0.3, -1.2);
    EXPECT_NEAR(run_on_data(c, x).norm(), x.norm(), 1e-12);
    EXPECT_LE(max_abs_diff(run_on_data(c, a * x + y), a * run_on_data(c, x) + run_on_data(c, y)), 1e-12);
    EXPECT_LE(max_abs_diff(run_on_data(c, x), CVector(m * x)), 1e-12);
  }
}

TEST(Simulator, DimensionMismatch) {
  Circuit c(3);
  EXPECT_THROW(apply_circuit(StateVector::zero(2), c), DimensionError);
  EXPECT_THROW(run_on_data(c, CVector::Zero(4)), DimensionError);
  EXPECT_THROW(StateVector(2, CVector::Zero(3)), DimensionError);
}

TEST(Simulator, TooManyQubits) {
  EXPECT_THROW(extract_matrix(Circuit(kMaxExtractQubits + 1)), TooManyQubits);
  EXPECT_NO_THROW(extract_matrix(Circuit(kMaxExtractQubits)));
}

TEST(Simulator, AncillaLeakDetected) {
  Circuit c(1, 1);
  c.add(Gate::x(QubitRef::ancilla(0), {ControlSpec::pos(d(0))}));
  try {
    extract_matrix(c);
    FAIL() << "expected AncillaNotRestored";
  } catch (const AncillaNotRestored& e) {
    EXPECT_EQ(e.column(), 1u);
  }
  // Clean ancilla usage is accepted.
  c.add(Gate::x(QubitRef::ancilla(0), {ControlSpec::pos(d(0))}));
  EXPECT_LE(max_abs_diff(extract_matrix(c), oracle::identity(2)), 0.0);
}

TEST(Simulator, SubspaceLeakDetected) {
  // Increment mod 8 viewed on the first 6 states leaks 5 -> 6.
  EXPECT_THROW(extract_matrix(build_increment_pow2(3), 6), AncillaNotRestored);
  EXPECT_NO_THROW(extract_matrix(build_increment_mod(6, 3, Window{0, 3}), 6));
}
