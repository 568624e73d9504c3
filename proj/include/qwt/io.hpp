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

// File formats: signal CSV (`re,im` per line), matrix dump CSV (`re+imj`
// entries) and QMF filter files:
//
//   taps 4
//   alpha: a0 a1 a2 a3
//   beta: b0 b1 b2 b3
//
// Filter taps may be plain reals or `re+imj` tokens.

#include "qwt/classical.hpp"
#include "qwt/error.hpp"
#include "qwt/linalg.hpp"
#include "qwt/text_format.hpp"

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace qwt {

inline std::string format_complex(cplx v) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gj", v.real(), v.imag());
  return buf;
}

inline cplx parse_complex(std::string_view s) {
  if (s.empty()) throw ParseError("empty complex token");
  if (s.back() != 'j') return {parse_double(s), 0.0};
  s.remove_suffix(1);
  std::size_t split = std::string_view::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, parse_double(s)};
  return {parse_double(s.substr(0, split)), parse_double(s.substr(split))};
}

inline CVector read_signal(std::istream& in) {
  std::vector<cplx> values;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
      throw ParseError("signal line " + std::to_string(line_no) + ": expected 're,im'");
    }
    try {
      values.emplace_back(parse_double(line.substr(0, comma)), parse_double(line.substr(comma + 1)));
    } catch (const ParseError& e) {
      throw ParseError("signal line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  CVector v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v(static_cast<Eigen::Index>(i)) = values[i];
  return v;
}

inline void write_signal(std::ostream& out, const CVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out << format_double(v(i).real()) << ',' << format_double(v(i).imag()) << '\n';
  }
}

inline void write_matrix(std::ostream& out, const DenseMatrix& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) out << ',';
      out << format_complex(m(r, c));
    }
    out << '\n';
  }
}

inline QmfPair read_qmf(std::istream& in) {
  std::string raw;
  std::vector<std::string> lines;
  while (std::getline(in, raw)) {
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    if (detail::tokens(raw).empty()) continue;
    lines.push_back(raw);
  }
  if (lines.size() != 3) throw ParseError("filter file needs taps/alpha/beta lines");
  const auto head = detail::tokens(lines[0]);
  if (head.size() != 2 || head[0] != "taps") throw ParseError("expected 'taps <2K>'");
  const std::size_t n = parse_index(head[1]);
  if (n < 2 || n % 2 != 0) throw ParseError("tap count must be even and >= 2");

  auto taps = [&](const std::string& line, std::string_view label) {
    const auto tok = detail::tokens(line);
    if (tok.empty() || tok[0] != label) {
      throw ParseError("expected '" + std::string(label) + "' line");
    }
    if (tok.size() != n + 1) throw ParseError(std::string(label) + " needs " + std::to_string(n) + " taps");
    std::vector<cplx> out;
    for (std::size_t i = 1; i < tok.size(); ++i) out.push_back(parse_complex(tok[i]));
    return out;
  };
  return QmfPair{taps(lines[1], "alpha:"), taps(lines[2], "beta:"), n};
}

inline void write_qmf(std::ostream& out, const QmfPair& pair) {
  auto emit = [&](const char* label, const std::vector<cplx>& t) {
    out << label;
    for (auto v : t) out << ' ' << (v.imag() == 0.0 ? format_double(v.real()) : format_complex(v));
    out << '\n';
  };
  out << "taps " << pair.taps() << '\n';
  emit("alpha:", pair.alpha);
  emit("beta:", pair.beta);
}

}  // namespace qwt
