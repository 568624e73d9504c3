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

#include "qwt/builders.hpp"
#include "qwt/classical.hpp"
#include "qwt/io.hpp"

#include <fstream>
#include <string>

namespace qwt {

/// A filter as both a split word (for circuits) and its extracted pair.
struct NamedFilter {
  std::string name;
  SplitWord word;
};

inline SplitWord daubechies4_word() { return lattice_to_word(daubechies4_angles()); }

/// `haar`, `d4`, or a path to a QMF filter file. Filters read from a file
/// are lattice-factored, so the word realizes the normalized pair.
inline NamedFilter resolve_filter(const std::string& spec) {
  if (spec == "haar") return {"haar", haar_word()};
  if (spec == "d4") return {"d4", daubechies4_word()};
  std::ifstream in(spec);
  if (!in) throw ParseError("cannot open filter file '" + spec + "'");
  const QmfPair pair = read_qmf(in);
  return {spec, lattice_to_word(lattice_factor(pair).angles)};
}

/// Pair for a named filter without going through a word.
inline QmfPair named_pair(const std::string& spec) {
  if (spec == "haar") return haar_pair();
  if (spec == "d4") return extract_qmf(daubechies4_word(), 4);
  std::ifstream in(spec);
  if (!in) throw ParseError("cannot open filter file '" + spec + "'");
  return read_qmf(in);
}

}  // namespace qwt
