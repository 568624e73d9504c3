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

#include "qwt/classical.hpp"
#include "qwt/io.hpp"

#include <gtest/gtest.h>

#include <limits>
#include <sstream>

using namespace qwt;

TEST(ComplexText, RoundTrip) {
  for (cplx v : {cplx(0.1, -0.2), cplx(-1e-300, 5e20), cplx(0, 0), cplx(1.0 / 3, 2.0 / 7)}) {
    EXPECT_EQ(parse_complex(format_complex(v)), v) << format_complex(v);
  }
  EXPECT_EQ(format_complex(cplx(1, -2)), "1-2j");
}

TEST(ComplexText, Forms) {
  EXPECT_EQ(parse_complex("2.5"), cplx(2.5, 0));
  EXPECT_EQ(parse_complex("-3j"), cplx(0, -3));
  EXPECT_EQ(parse_complex("1e-3+2E+1j"), cplx(1e-3, 20));
  EXPECT_EQ(parse_complex("+1-1j"), cplx(1, -1));
  EXPECT_THROW(parse_complex(""), ParseError);
  EXPECT_THROW(parse_complex("1+xj"), ParseError);
}

TEST(SignalCsv, RoundTrip) {
  CVector v(3);
  v << cplx(0.1, 0), cplx(-2, 1e-17), cplx(std::numeric_limits<double>::min(), 3);
  std::stringstream ss;
  write_signal(ss, v);
  EXPECT_EQ(read_signal(ss), v);
}

TEST(SignalCsv, Tolerant) {
  std::istringstream in("1,0\r\n\n  0.5,-0.5  \n");
  const CVector v = read_signal(in);
  ASSERT_EQ(v.size(), 2);
  EXPECT_EQ(v(1), cplx(0.5, -0.5));
}

TEST(SignalCsv, Malformed) {
  for (const char* bad : {"1\n", "1,2,3\n", "a,b\n", "1,\n"}) {
    std::istringstream in(bad);
    EXPECT_THROW(read_signal(in), ParseError) << bad;
  }
}

TEST(MatrixCsv, Layout) {
  DenseMatrix m(2, 2);
  m << cplx(1, 0), cplx(0, 1), cplx(-0.5, 0), cplx(0, 0);
  std::ostringstream out;
  write_matrix(out, m);
  EXPECT_EQ(out.str(), "1+0j,0+1j\n-0.5+0j,0+0j\n");
}

TEST(QmfFile, RoundTrip) {
  const QmfPair h = haar_pair(2);
  std::stringstream ss;
  write_qmf(ss, h);
  const QmfPair back = read_qmf(ss);
  EXPECT_EQ(back.alpha, h.alpha);
  EXPECT_EQ(back.beta, h.beta);
  EXPECT_EQ(back.period, 2u);
}

TEST(QmfFile, ParsesCommentsAndRejectsBadInput) {
  std::istringstream ok("# d\ntaps 2\nalpha: 1 0  # lowpass\nbeta: 0 1\n");
  const QmfPair p = read_qmf(ok);
  EXPECT_EQ(p.alpha[0], cplx(1));
  EXPECT_EQ(p.beta[1], cplx(1));
  for (const char* bad : {"taps 2\nalpha: 1 0\n", "taps 3\nalpha: 1 0 0\nbeta: 0 1 0\n",
                          "taps 2\nalpha: 1\nbeta: 0 1\n", "taps 2\nbeta: 1 0\nalpha: 0 1\n",
                          "tap 2\nalpha: 1 0\nbeta: 0 1\n"}) {
    std::istringstream in(bad);
    EXPECT_THROW(read_qmf(in), ParseError) << bad;
  }
}
