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
#include "qwt/classical.hpp"
#include "qwt/decompose.hpp"
#include "qwt/filters.hpp"
#include "qwt/simulator.hpp"
#include "qwt/text_format.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qwt;

namespace {

QubitRef d(std::size_t i) { return QubitRef::data(i); }

void expect_all_elementary(const Circuit& c) {
  for (const auto& g : c.gates()) ASSERT_TRUE(is_elementary(g)) << serialize_gate(g);
}

// Data-subspace matrices of c and its lowering agree.
void expect_sound(const Circuit& c, std::optional<std::size_t> subspace = std::nullopt) {
  const Circuit e = decompose_to_elementary(c);
  expect_all_elementary(e);
  EXPECT_LE(max_abs_diff(extract_matrix(e, subspace), extract_matrix(c, subspace)), 1e-10);
  EXPECT_EQ(count_gates(e).elementary_total, e.size());
}

}  // namespace

TEST(Decompose, ToffoliMatchesPermutation) {
  Circuit c(3);
  c.add(Gate::x(d(0), {ControlSpec::pos(d(1)), ControlSpec::pos(d(2))}));
  const Circuit e = decompose_to_elementary(c);
  EXPECT_EQ(e.size(), kToffoliCost);
  EXPECT_EQ(e.n_ancilla(), 0u);
  expect_all_elementary(e);
  const DenseMatrix want = oracle::permutation(8, [](std::size_t m) { return m >= 6 ? m ^ 1 : m; });
  EXPECT_LE(max_abs_diff(extract_matrix(e), want), 1e-12);
}

TEST(Decompose, CnotPassesThrough) {
  Circuit c(2);
  c.add(Gate::x(d(0), {ControlSpec::pos(d(1))}));
  EXPECT_EQ(decompose_to_elementary(c), c);
}

TEST(Decompose, NegativeControlIsConjugated) {
  Circuit c(2);
  c.add(Gate::x(d(0), {ControlSpec::neg(d(1))}));
  const Circuit e = decompose_to_elementary(c);
  ASSERT_EQ(e.size(), 3u);
  EXPECT_EQ(e.gates()[0], Gate::x(d(1)));
  EXPECT_EQ(e.gates()[2], Gate::x(d(1)));
  EXPECT_LE(max_abs_diff(extract_matrix(e), extract_matrix(c)), 1e-12);
}

TEST(Decompose, ManyControlledNotIsLinear) {
  // X on qubit 0 controlled by qubits 1..k, alternating polarity, 6 data qubits.
  std::vector<std::size_t> sizes;
  for (std::size_t k = 2; k <= 5; ++k) {
    Circuit c(6);
    Controls ctl;
    std::size_t mask = 0, value = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      const bool positive = i % 2 == 1;
      ctl.push_back({d(i), positive ? Polarity::positive : Polarity::negative});
      mask |= std::size_t{1} << i;
      if (positive) value |= std::size_t{1} << i;
    }
    c.add(Gate::x(d(0), ctl));
    const Circuit e = decompose_to_elementary(c);
    expect_all_elementary(e);
    EXPECT_EQ(e.n_ancilla(), k - 2);
    const DenseMatrix want =
        oracle::permutation(64, [&](std::size_t m) { return (m & mask) == value ? m ^ 1 : m; });
    EXPECT_LE(max_abs_diff(extract_matrix(e), want), 1e-12) << "k=" << k;
    sizes.push_back(e.size() - 2 * (k / 2));  // strip the X conjugations
  }
  // Each extra control adds one Toffoli on each side of the chain.
  for (std::size_t i = 1; i < sizes.size(); ++i) EXPECT_EQ(sizes[i] - sizes[i - 1], 2 * kToffoliCost);
}

TEST(Decompose, ControlledUnitariesMatchReference) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t k = 1 + trial % 4;
    Circuit c(5);
    Controls ctl;
    for (std::size_t i = 1; i <= k; ++i) {
      ctl.push_back({d(i), trial % 3 == 0 ? Polarity::negative : Polarity::positive});
    }
    switch (trial % 3) {
      case 0: c.add(Gate::u2(oracle::random_unitary(rng), d(0), ctl)); break;
      case 1: c.add(Gate::rot(0.7 * trial, d(0), ctl)); break;
      default: c.add(Gate::h(d(0), ctl)); break;
    }
    const Circuit e = decompose_to_elementary(c);
    expect_all_elementary(e);
    EXPECT_LE(max_abs_diff(extract_matrix(e), oracle::circuit_matrix(c)), 1e-10) << trial;
  }
}

TEST(Decompose, EulerAnglesReconstruct) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix2 u = oracle::random_unitary(rng);
    if (trial == 0) u = pauli_x_matrix();
    if (trial == 1) u = Matrix2::Identity() * cplx(0, 1);
    const EulerZyz e = euler_zyz(u);
    const Matrix2 r = std::polar(1.0, e.phase) * rz_matrix(e.beta) * ry_matrix(e.gamma) * rz_matrix(e.delta);
    EXPECT_LE((r - u).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Decompose, BuilderCircuitsAreSound) {
  for (std::size_t w = 1; w <= 5; ++w) {
    expect_sound(build_increment_pow2(w));
    expect_sound(build_increment_pow2(5, Window{0, w}, {}, Conditioning::targeted));
  }
  expect_sound(build_increment_pow2(5, Window{1, 4}, {ControlSpec::neg(d(0))}));
  expect_sound(build_increment_pow2(5, Window{0, 3}, {ControlSpec::pos(d(3)), ControlSpec::neg(d(4))}));
  for (std::size_t mod : {6u, 10u, 12u}) {
    const std::size_t w = ceil_log2(mod);
    expect_sound(build_increment_mod(mod, w, Window{0, w}), mod);
  }
  for (std::size_t n = 1; n <= 5; ++n) expect_sound(build_walsh_hadamard(n));
  for (auto kind : {TransformKind::packet, TransformKind::pyramid}) {
    for (const auto& word : {haar_word(), daubechies4_word()}) {
      for (std::size_t n = 2; n <= 4; ++n) {
        expect_sound(build_transform(TransformPlan{kind, n, std::size_t{1} << n}, word));
      }
      expect_sound(build_transform(TransformPlan{kind, 2, 12}, word), 12);
    }
  }
}

TEST(CountGates, WalshHadamard) {
  const auto r = count_gates(build_walsh_hadamard(3));
  EXPECT_EQ(r.count(GateKind::H, 0), 3u);
  EXPECT_EQ(r.total, 3u);
  EXPECT_EQ(r.elementary_total, 3u);
}

TEST(CountGates, IncrementCarryStages) {
  const auto r = count_gates(build_increment_pow2(4));
  EXPECT_EQ(r.ancilla_compute, 2u);
  EXPECT_EQ(r.ancilla_uncompute, 2u);
  EXPECT_EQ(r.toffoli(), 4u);
  EXPECT_EQ(r.cnot(), 3u);
  EXPECT_EQ(r.count(GateKind::X, 0), 1u);
}

TEST(CountGates, EmptyCircuit) {
  const auto r = count_gates(Circuit(3));
  EXPECT_EQ(r.total, 0u);
  EXPECT_EQ(r.elementary_total, 0u);
  for (GateKind k : {GateKind::X, GateKind::H, GateKind::Rot, GateKind::U2}) EXPECT_EQ(r.count_kind(k), 0u);
}

TEST(CountGates, ElementaryTotalDominatesLogical) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto r = count_gates(build_transform(TransformPlan{TransformKind::pyramid, n, std::size_t{1} << n},
                                               daubechies4_word()));
    EXPECT_GE(r.elementary_total, r.total);
  }
}
