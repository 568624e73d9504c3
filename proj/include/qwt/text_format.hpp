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

// Line-oriented circuit text format:
//
//   qubits 3
//   ancilla 1
//   H t=0
//   X t=a0 c=+0,-1
//   R theta=0.78539816339744828 t=2
//   U2 m=re00,im00,re01,im01,re10,im10,re11,im11 t=1 c=+a0
//
// '#' starts a comment. Floats are written with 17 significant digits so
// parse(serialize(c)) == c bit for bit.

#include "qwt/circuit.hpp"
#include "qwt/error.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace qwt {

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline double parse_double(std::string_view s) {
  double v = 0.0;
  // from_chars rejects a leading '+', which %g never emits but users might.
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("bad number '" + std::string(s) + "'");
  }
  return v;
}

inline std::size_t parse_index(std::string_view s) {
  std::size_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw ParseError("bad index '" + std::string(s) + "'");
  }
  return v;
}

namespace detail {

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline QubitRef parse_qubit(std::string_view s) {
  if (!s.empty() && s.front() == 'a') {
    return QubitRef::ancilla(parse_index(s.substr(1)));
  }
  return QubitRef::data(parse_index(s));
}

inline std::string qubit_token(QubitRef q) {
  return (q.is_ancilla() ? "a" : "") + std::to_string(q.index);
}

}  // namespace detail

inline std::string serialize_gate(const Gate& g) {
  std::string line = kind_name(g.kind);
  if (g.kind == GateKind::Rot) line += " theta=" + format_double(g.theta);
  if (g.kind == GateKind::U2) {
    line += " m=";
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        const cplx v = g.unitary(r, c);
        if (r + c > 0) line += ',';
        line += format_double(v.real()) + ',' + format_double(v.imag());
      }
    }
  }
  line += " t=" + detail::qubit_token(g.target);
  if (!g.controls.empty()) {
    line += " c=";
    for (std::size_t i = 0; i < g.controls.size(); ++i) {
      if (i) line += ',';
      line += g.controls[i].polarity == Polarity::positive ? '+' : '-';
      line += detail::qubit_token(g.controls[i].qubit);
    }
  }
  return line;
}

inline std::string serialize(const Circuit& c) {
  std::string out = "qubits " + std::to_string(c.n_data()) + "\nancilla " +
                    std::to_string(c.n_ancilla()) + "\n";
  for (const auto& g : c.gates()) out += serialize_gate(g) + '\n';
  return out;
}

/// Parses the text format and validates the result.
inline Circuit parse_circuit(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::size_t header = 0;
  std::size_t n_data = 0;
  Circuit circuit;
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError("line " + std::to_string(line_no) + ": " + msg);
  };

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto tok = detail::tokens(line);
    if (tok.empty()) continue;

    try {
      if (header == 0) {
        if (tok.size() != 2 || tok[0] != "qubits") throw fail("expected 'qubits <n>'");
        n_data = parse_index(tok[1]);
        ++header;
        continue;
      }
      if (header == 1) {
        if (tok.size() != 2 || tok[0] != "ancilla") throw fail("expected 'ancilla <n>'");
        circuit = Circuit(n_data, parse_index(tok[1]));
        ++header;
        continue;
      }

      Gate g;
      const std::string_view name = tok[0];
      if (name == "X") {
        g.kind = GateKind::X;
      } else if (name == "H") {
        g.kind = GateKind::H;
      } else if (name == "R") {
        g.kind = GateKind::Rot;
      } else if (name == "U2") {
        g.kind = GateKind::U2;
      } else {
        throw fail("unknown gate '" + std::string(name) + "'");
      }

      bool have_target = false;
      bool have_param = g.kind == GateKind::X || g.kind == GateKind::H;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        const auto eq = tok[i].find('=');
        if (eq == std::string_view::npos) throw fail("expected key=value");
        const auto key = tok[i].substr(0, eq);
        const auto value = tok[i].substr(eq + 1);
        if (key == "t" && !have_target) {
          g.target = detail::parse_qubit(value);
          have_target = true;
        } else if (key == "theta" && g.kind == GateKind::Rot && !have_param) {
          g.theta = parse_double(value);
          have_param = true;
        } else if (key == "m" && g.kind == GateKind::U2 && !have_param) {
          const auto parts = detail::split(value, ',');
          if (parts.size() != 8) throw fail("U2 needs 8 floats");
          for (int k = 0; k < 4; ++k) {
            g.unitary(k / 2, k % 2) =
                cplx(parse_double(parts[2 * k]), parse_double(parts[2 * k + 1]));
          }
          have_param = true;
        } else if (key == "c" && g.controls.empty()) {
          for (auto part : detail::split(value, ',')) {
            if (part.size() < 2 || (part[0] != '+' && part[0] != '-')) {
              throw fail("control must be +q or -q");
            }
            g.controls.push_back(
                {detail::parse_qubit(part.substr(1)),
                 part[0] == '+' ? Polarity::positive : Polarity::negative});
          }
        } else {
          throw fail("unexpected field '" + std::string(tok[i]) + "'");
        }
      }
      if (!have_target) throw fail("missing target");
      if (!have_param) throw fail("missing gate parameter");
      circuit.add(std::move(g));
    } catch (const ParseError& e) {
      if (std::string_view(e.what()).starts_with("line ")) throw;
      throw fail(e.what());
    }
  }
  if (header < 2) throw ParseError("missing qubits/ancilla header");
  try {
    require_valid(circuit);
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
  return circuit;
}

inline Circuit parse_circuit(const std::string& text) {
  std::istringstream in(text);
  return parse_circuit(in);
}

}  // namespace qwt
