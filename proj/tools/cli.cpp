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

#include "cli.hpp"

#include "qwt/qwt.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace qwt::cli {
namespace {

struct ConfigError : Error {
  using Error::Error;
};

struct CommandConfig {
  std::string subcommand;
  std::string kind;
  std::optional<std::size_t> qubits;
  std::optional<std::size_t> length;
  std::size_t depth = 1;
  std::string filter = "haar";
  Ordering ordering = Ordering::interleaved;
  double tol = 1e-10;
  std::string in;
  std::string out;
  bool elementary = false;
};

// A circuit together with what it is supposed to compute.
struct Target {
  std::string kind;
  Circuit circuit;
  std::size_t length = 0;  // valid data subspace 0..length-1
  std::optional<TransformPlan> plan;
  SplitWord word;
};

bool is_transform(const std::string& k) { return k == "packet" || k == "pyramid"; }

std::size_t resolve_length(const CommandConfig& cfg) {
  if (cfg.qubits && cfg.length) throw ConfigError("give either --qubits or --length, not both");
  if (cfg.qubits) {
    if (*cfg.qubits == 0 || *cfg.qubits > 30) throw ConfigError("--qubits must be in 1..30");
    return std::size_t{1} << *cfg.qubits;
  }
  if (cfg.length) {
    if (*cfg.length < 2 || *cfg.length % 2 != 0) throw ConfigError("--length must be even and >= 2");
    if (*cfg.length > (std::size_t{1} << 30)) throw ConfigError("--length too large");
    return *cfg.length;
  }
  throw ConfigError("--qubits or --length is required");
}

// Validates the configuration and fixes the target description. Nothing here
// builds circuits, so every failure is a configuration error.
Target plan_target(const CommandConfig& cfg) {
  Target t;
  t.kind = cfg.kind;
  if (cfg.kind == "walsh") {
    if (!cfg.qubits) throw ConfigError("walsh needs --qubits");
    t.length = resolve_length(cfg);
  } else if (cfg.kind == "increment" || cfg.kind == "decrement") {
    t.length = resolve_length(cfg);
  } else if (is_transform(cfg.kind)) {
    t.length = resolve_length(cfg);
    TransformPlan plan{cfg.kind == "packet" ? TransformKind::packet : TransformKind::pyramid,
                       cfg.depth, t.length, cfg.ordering};
    try {
      plan.validate();
      t.word = resolve_filter(cfg.filter).word;
    } catch (const Error& e) {
      throw ConfigError(e.what());
    }
    t.plan = plan;
  } else {
    throw ConfigError("unknown circuit kind '" + cfg.kind +
                      "' (walsh, increment, decrement, packet, pyramid)");
  }
  return t;
}

void build_target(Target& t) {
  const std::size_t n = ceil_log2(t.length);
  if (t.kind == "walsh") {
    t.circuit = build_walsh_hadamard(n);
  } else if (t.kind == "increment" || t.kind == "decrement") {
    t.circuit = build_translation(t.kind == "increment" ? +1 : -1, t.length, n, Window{0, n});
  } else {
    t.circuit = build_transform(*t.plan, t.word);
  }
}

Circuit read_circuit_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open circuit file '" + path + "'");
  try {
    return parse_circuit(in);
  } catch (const ParseError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

// Independent reference result for a length-`t.length` input.
CVector oracle_apply(const Target& t, const CVector& s) {
  const auto len = static_cast<Eigen::Index>(t.length);
  if (t.kind == "walsh") {
    TransformPlan plan{TransformKind::packet, ceil_log2(t.length), t.length};
    return classical_transform(plan, haar_pair(), s);
  }
  if (t.kind == "increment" || t.kind == "decrement") {
    const Eigen::Index d = t.kind == "increment" ? 1 : len - 1;
    CVector out(len);
    for (Eigen::Index m = 0; m < len; ++m) out((m + d) % len) = s(m);
    return out;
  }
  TransformPlan plan = *t.plan;
  plan.ordering = Ordering::interleaved;
  return classical_transform(plan, extract_qmf(t.word, t.length), s);
}

std::optional<std::size_t> subspace_of(const Target& t) {
  if (t.length == (std::size_t{1} << t.circuit.n_data())) return std::nullopt;
  return t.length;
}

void print_report(std::ostream& os, const GateCountReport& r, const Circuit& c) {
  os << "data qubits: " << c.n_data() << ", ancillas: " << c.n_ancilla() << '\n';
  os << std::left << std::setw(6) << "kind" << std::right;
  for (const char* h : {"c0", "c1", "c2", "c3+"}) os << std::setw(8) << h;
  os << std::setw(9) << "total" << '\n';
  for (GateKind k : {GateKind::X, GateKind::H, GateKind::Rot, GateKind::U2}) {
    os << std::left << std::setw(6) << kind_name(k) << std::right;
    for (std::size_t b = 0; b < 4; ++b) os << std::setw(8) << r.count(k, b);
    os << std::setw(9) << r.count_kind(k) << '\n';
  }
  os << "logical gates:        " << r.total << '\n';
  os << "toffoli (2-control X): " << r.toffoli() << '\n';
  os << "ancilla compute:      " << r.ancilla_compute << '\n';
  os << "ancilla uncompute:    " << r.ancilla_uncompute << '\n';
  os << "elementary total:     " << r.elementary_total << '\n';
}

void write_report_csv(std::ostream& os, const GateCountReport& r) {
  os << "kind,c0,c1,c2,c3+\n";
  for (GateKind k : {GateKind::X, GateKind::H, GateKind::Rot, GateKind::U2}) {
    os << kind_name(k);
    for (std::size_t b = 0; b < 4; ++b) os << ',' << r.count(k, b);
    os << '\n';
  }
  os << "total," << r.total << "\nelementary_total," << r.elementary_total
     << "\nancilla_compute," << r.ancilla_compute << "\nancilla_uncompute," << r.ancilla_uncompute
     << '\n';
}

template <class F>
void with_output(const std::string& path, std::ostream& fallback, F&& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot write '" + path + "'");
  write(f);
}

// Target for commands that accept either a circuit kind or --in <circuit>.
Target target_or_file(const CommandConfig& cfg, bool build) {
  if (cfg.kind.empty()) {
    if (cfg.in.empty()) throw ConfigError("give a circuit kind or --in <circuit file>");
    Target t;
    t.circuit = read_circuit_file(cfg.in);
    t.length = std::size_t{1} << t.circuit.n_data();
    return t;
  }
  Target t = plan_target(cfg);
  if (build) build_target(t);
  return t;
}

int cmd_build(const CommandConfig& cfg, std::ostream& out) {
  if (cfg.kind.empty()) throw ConfigError("build needs a circuit kind");
  Target t = plan_target(cfg);
  build_target(t);
  const std::string text = serialize(t.circuit);
  if (cfg.out.empty()) {
    out << text;
    return kOk;
  }
  with_output(cfg.out, out, [&](std::ostream& os) { os << text; });
  const auto r = count_gates(t.circuit);
  out << "wrote " << cfg.out << ": " << r.total << " gates, " << r.elementary_total
      << " elementary, " << t.circuit.n_data() << " data qubits, " << t.circuit.n_ancilla()
      << " ancillas\n";
  return kOk;
}

int cmd_count(const CommandConfig& cfg, std::ostream& out) {
  Target t = target_or_file(cfg, true);
  const Circuit c = cfg.elementary ? decompose_to_elementary(t.circuit) : t.circuit;
  const auto r = count_gates(c);
  print_report(out, r, c);
  if (!cfg.out.empty()) with_output(cfg.out, out, [&](std::ostream& os) { write_report_csv(os, r); });
  return kOk;
}

int cmd_matrix(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  Target t = target_or_file(cfg, false);
  const std::size_t n = t.kind.empty() ? t.circuit.n_data() : ceil_log2(t.length);
  if (n > kMaxExtractQubits) {
    err << "matrix: " << n << " data qubits exceeds the limit of " << kMaxExtractQubits << '\n';
    return kTooLarge;
  }
  if (!t.kind.empty()) build_target(t);
  const DenseMatrix m = extract_matrix(t.circuit, subspace_of(t));
  with_output(cfg.out, out, [&](std::ostream& os) { write_matrix(os, m); });
  return kOk;
}

int cmd_sim(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.kind.empty()) throw ConfigError("sim needs a circuit kind");
  if (cfg.in.empty()) throw ConfigError("sim needs --in <signal.csv>");
  Target t = plan_target(cfg);
  std::ifstream in(cfg.in);
  if (!in) throw ConfigError("cannot open signal file '" + cfg.in + "'");
  CVector signal;
  try {
    signal = read_signal(in);
  } catch (const ParseError& e) {
    err << "sim: " << e.what() << '\n';
    return kBadSignal;
  }
  const std::size_t n = ceil_log2(t.length);
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  if (signal.size() != dim) {
    err << "sim: signal has " << signal.size() << " entries, expected " << dim << '\n';
    return kDimensionMismatch;
  }
  for (Eigen::Index i = static_cast<Eigen::Index>(t.length); i < dim; ++i) {
    if (signal(i) != cplx{0.0}) {
      err << "sim: entry " << i << " is nonzero but the transform length is " << t.length << '\n';
      return kBadSignal;
    }
  }
  build_target(t);
  CVector coeffs = run_on_data(t.circuit, signal, subspace_of(t)).head(static_cast<Eigen::Index>(t.length));
  if (t.plan && t.plan->ordering == Ordering::subband) coeffs = reorder(*t.plan, coeffs);
  with_output(cfg.out, out, [&](std::ostream& os) { write_signal(os, coeffs); });
  return kOk;
}

int cmd_verify(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.kind.empty()) throw ConfigError("verify needs a circuit kind");
  Target t = plan_target(cfg);
  if (cfg.in.empty()) {
    build_target(t);
  } else {
    t.circuit = read_circuit_file(cfg.in);
    if (t.circuit.n_data() != ceil_log2(t.length)) {
      err << "verify: circuit has " << t.circuit.n_data() << " data qubits, expected "
          << ceil_log2(t.length) << '\n';
      return kDimensionMismatch;
    }
  }
  const std::size_t n = t.circuit.n_data();
  const auto len = static_cast<Eigen::Index>(t.length);
  const auto dim = Eigen::Index{1} << n;
  double worst = 0.0;
  std::size_t worst_col = 0;
  std::string mode;
  auto check = [&](const CVector& s, std::size_t col) {
    CVector full = CVector::Zero(dim);
    full.head(len) = s;
    const CVector got = run_on_data(t.circuit, full, subspace_of(t), col).head(len);
    const double r = max_abs_diff(got, oracle_apply(t, s));
    if (r > worst) {
      worst = r;
      worst_col = col;
    }
  };
  try {
    if (n <= 6) {
      mode = "column";
      for (Eigen::Index m = 0; m < len; ++m) {
        CVector e = CVector::Zero(len);
        e(m) = 1.0;
        check(e, static_cast<std::size_t>(m));
      }
    } else {
      mode = "signal";
      std::mt19937_64 rng(20260416);
      std::normal_distribution<double> g;
      for (std::size_t k = 0; k < 8; ++k) {
        CVector s(len);
        for (Eigen::Index i = 0; i < len; ++i) s(i) = cplx(g(rng), g(rng));
        check(s, k);
      }
    }
  } catch (const AncillaNotRestored& e) {
    err << "verify " << t.kind << ": FAIL, " << e.what() << '\n';
    return kVerifyFailed;
  }
  std::ostringstream msg;
  msg << "verify " << t.kind << ": max residual " << format_double(worst) << " (tol "
      << format_double(cfg.tol) << ", worst " << mode << ' ' << worst_col << ")";
  if (worst <= cfg.tol) {
    out << msg.str() << " PASS\n";
    return kOk;
  }
  err << msg.str() << " FAIL\n";
  return kVerifyFailed;
}

int cmd_factor(const CommandConfig& cfg, std::ostream& out) {
  QmfPair pair;
  try {
    pair = named_pair(cfg.filter);
  } catch (const ParseError& e) {
    throw ConfigError(e.what());
  }
  if (pair.period < pair.taps()) pair.period = pair.taps() + pair.taps() % 2;
  const auto f = lattice_factor(pair);
  out << "filter " << cfg.filter << '\n';
  out << "angles " << f.angles.size() << '\n';
  for (double a : f.angles) out << format_double(a) << '\n';
  out << "shift " << f.shift << '\n';
  out << "alpha_negated " << (f.alpha_negated ? 1 : 0) << '\n';
  out << "beta_negated " << (f.beta_negated ? 1 : 0) << '\n';
  return kOk;
}

void add_circuit_options(CLI::App* sub, CommandConfig& cfg, bool kind_required) {
  auto* kind = sub->add_option("kind", cfg.kind, "walsh|increment|decrement|packet|pyramid");
  if (kind_required) kind->required();
  sub->add_option("--qubits", cfg.qubits, "Data qubit count (signal length 2^n)");
  sub->add_option("--length", cfg.length, "Signal period 2N");
  sub->add_option("--depth", cfg.depth, "Transform levels");
  sub->add_option("--filter", cfg.filter, "haar, d4 or a filter file");
  sub->add_option("--ordering", cfg.ordering, "interleaved|subband")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Ordering>{{"interleaved", Ordering::interleaved},
                                          {"subband", Ordering::subband}}));
  sub->add_option("--tol", cfg.tol, "Verification tolerance");
  sub->add_option("--in", cfg.in, "Input file");
  sub->add_option("-o,--out", cfg.out, "Output file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandConfig cfg;
  CLI::App app{"Quantum wavelet circuit compiler and simulator"};
  app.require_subcommand(1);

  auto* build = app.add_subcommand("build", "Build a circuit and write it in text form");
  add_circuit_options(build, cfg, true);
  auto* sim = app.add_subcommand("sim", "Apply a circuit to a signal CSV");
  add_circuit_options(sim, cfg, true);
  auto* verify = app.add_subcommand("verify", "Compare a circuit against the classical oracle");
  add_circuit_options(verify, cfg, true);
  auto* count = app.add_subcommand("count", "Report gate counts");
  add_circuit_options(count, cfg, false);
  count->add_flag("--elementary", cfg.elementary, "Count after lowering to elementary gates");
  auto* matrix = app.add_subcommand("matrix", "Dump the circuit matrix as CSV");
  add_circuit_options(matrix, cfg, false);
  auto* factor = app.add_subcommand("factor", "Lattice-factor a filter pair");
  factor->add_option("--filter", cfg.filter, "haar, d4 or a filter file");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kConfigError;
  }

  try {
    if (build->parsed()) return cmd_build(cfg, out);
    if (sim->parsed()) return cmd_sim(cfg, out, err);
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    if (count->parsed()) return cmd_count(cfg, out);
    if (matrix->parsed()) return cmd_matrix(cfg, out, err);
    if (factor->parsed()) return cmd_factor(cfg, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const FactorizationError& e) {
    err << "error: " << e.what() << '\n';
    return kBuildError;
  } catch (const BuildError& e) {
    err << "error: " << e.what() << '\n';
    return kBuildError;
  } catch (const TooManyQubits& e) {
    err << "error: " << e.what() << '\n';
    return kTooLarge;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return kDimensionMismatch;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kBuildError;
  }
  return kConfigError;
}

}  // namespace qwt::cli
