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

/**
 * Classical periodized filter banks: splitting matrices, QMF checks,
 * multi-level transforms, subband orderings and lattice factorization of
 * real orthogonal filter pairs.
 *
 * Lattice convention. The synthesis polyphase matrix of a pair is
 *
 *     P(z) = [ a_e(z)  b_e(z) ]      a_e(z) = sum_k alpha_{2k}   z^-k
 *            [ a_o(z)  b_o(z) ]      a_o(z) = sum_k alpha_{2k+1} z^-k
 *
 * and a lattice word realizes P = R(t_K) D R(t_{K-1}) ... D R(t_1) with
 * D = diag(1, z^-1). Such products have det P = +z^-(K-1). A pair is
 * normalized by an even cyclic shift moving alpha's support to index 0,
 * a sign on alpha making sum(alpha) > 0 and a sign on beta making the
 * determinant's leading coefficient +1.
 */

#include "qwt/error.hpp"
#include "qwt/linalg.hpp"
#include "qwt/plan.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

namespace qwt {

inline constexpr double kQmfTol = 1e-10;
inline constexpr double kPeelTol = 1e-8;

/// Filter pair (alpha, beta) with taps 0..size-1, viewed on Z / period Z.
/// Taps beyond the period wrap around and add up.
struct QmfPair {
  std::vector<cplx> alpha;
  std::vector<cplx> beta;
  std::size_t period = 0;

  std::size_t taps() const { return std::max(alpha.size(), beta.size()); }

  static std::vector<cplx> periodize(const std::vector<cplx>& taps, std::size_t p) {
    std::vector<cplx> out(p, 0.0);
    for (std::size_t n = 0; n < taps.size(); ++n) out[n % p] += taps[n];
    return out;
  }
  std::vector<cplx> alpha_mod(std::size_t p) const { return periodize(alpha, p); }
  std::vector<cplx> beta_mod(std::size_t p) const { return periodize(beta, p); }
};

struct QmfReport {
  bool pass = false;
  double residual = 0.0;
};

namespace detail {

inline void check_period(std::size_t p) {
  if (p < 2 || p % 2 != 0) {
    throw DimensionError("period must be even and >= 2, got " + std::to_string(p));
  }
}

// <T_{2s} x, y> for s = 0..p/2-1 on Z/pZ.
inline std::vector<cplx> even_correlation(const std::vector<cplx>& x,
                                          const std::vector<cplx>& y) {
  const std::size_t p = x.size();
  std::vector<cplx> out(p / 2, 0.0);
  for (std::size_t s = 0; s < p / 2; ++s) {
    cplx acc = 0.0;
    for (std::size_t n = 0; n < p; ++n) acc += y[n] * std::conj(x[(n + p - 2 * s) % p]);
    out[s] = acc;
  }
  return out;
}

}  // namespace detail

/// Orthonormality of the even translates of alpha and beta on Z/period.
inline QmfReport qmf_check(const QmfPair& pair, double tol = kQmfTol) {
  detail::check_period(pair.period);
  const auto a = pair.alpha_mod(pair.period);
  const auto b = pair.beta_mod(pair.period);
  double residual = 0.0;
  // Inner products between translates depend only on the shift difference.
  const auto aa = detail::even_correlation(a, a);
  const auto bb = detail::even_correlation(b, b);
  const auto ab = detail::even_correlation(a, b);
  for (std::size_t s = 0; s < aa.size(); ++s) {
    const double delta = s == 0 ? 1.0 : 0.0;
    residual = std::max({residual, std::abs(aa[s] - delta), std::abs(bb[s] - delta),
                         std::abs(ab[s])});
  }
  return {residual <= tol, residual};
}

enum class Direction { synthesis, analysis };

/// Base change with columns f_{2k} = T_{2k} alpha, f_{2k+1} = T_{2k} beta
/// (synthesis), or its adjoint (analysis).
inline DenseMatrix splitting_matrix(const QmfPair& pair, std::size_t period, Direction dir) {
  detail::check_period(period);
  const auto a = pair.alpha_mod(period);
  const auto b = pair.beta_mod(period);
  const auto p = static_cast<Eigen::Index>(period);
  DenseMatrix m = DenseMatrix::Zero(p, p);
  for (Eigen::Index k = 0; k < p / 2; ++k) {
    for (Eigen::Index n = 0; n < p; ++n) {
      const auto src = static_cast<std::size_t>((n - 2 * k + p) % p);
      m(n, 2 * k) = a[src];
      m(n, 2 * k + 1) = b[src];
    }
  }
  return dir == Direction::synthesis ? m : DenseMatrix(m.adjoint());
}

/// Synthesis operator of a word as a product of step matrices (first step
/// rightmost), or its adjoint.
inline DenseMatrix splitting_matrix(const SplitWord& word, std::size_t period, Direction dir) {
  detail::check_period(period);
  validate_word(word);
  const auto p = static_cast<Eigen::Index>(period);
  DenseMatrix o = DenseMatrix::Identity(p, p);
  for (const auto& step : word.steps) {
    DenseMatrix s = DenseMatrix::Zero(p, p);
    if (const auto* r = std::get_if<RotationStep>(&step)) {
      for (Eigen::Index k = 0; k < p; k += 2) s.block<2, 2>(k, k) = r->matrix;
    } else {
      const int d = std::get<ShiftStep>(step).direction;
      for (Eigen::Index m = 0; m < p; ++m) s((m + d + p) % p, m) = 1.0;
    }
    o = s * o;
  }
  return dir == Direction::synthesis ? o : DenseMatrix(o.adjoint());
}

/// alpha = O e_0, beta = O e_1 for the synthesis operator O of the word.
/// Taps are returned as computed (length = period), without normalization.
inline QmfPair extract_qmf(const SplitWord& word, std::size_t period) {
  const DenseMatrix o = splitting_matrix(word, period, Direction::synthesis);
  QmfPair pair;
  pair.period = period;
  pair.alpha.assign(o.col(0).data(), o.col(0).data() + o.rows());
  pair.beta.assign(o.col(1).data(), o.col(1).data() + o.rows());
  return pair;
}

/// Coefficient vector of the multi-level transform of `signal`.
///
/// Level j applies the analysis matrix of period length/2^(j-1) to each
/// stride-2^(j-1) subsequence (packet) or only to the one at offset 0
/// (pyramid). Output is interleaved unless the plan asks for subbands.
inline CVector reorder(const TransformPlan& plan, const CVector& coeffs);

inline CVector classical_transform(const TransformPlan& plan, const QmfPair& pair,
                                   const CVector& signal) {
  plan.validate();
  if (signal.size() != static_cast<Eigen::Index>(plan.length)) {
    throw DimensionError("signal length " + std::to_string(signal.size()) +
                         " does not match plan length " + std::to_string(plan.length));
  }
  CVector x = signal;
  for (std::size_t j = 1; j <= plan.depth; ++j) {
    const std::size_t len = plan.level_length(j);
    const std::size_t stride = std::size_t{1} << (j - 1);
    const DenseMatrix s = splitting_matrix(pair, len, Direction::analysis);
    const std::size_t offsets = plan.kind == TransformKind::packet ? stride : 1;
    for (std::size_t r = 0; r < offsets; ++r) {
      CVector y(static_cast<Eigen::Index>(len));
      for (std::size_t q = 0; q < len; ++q) y(q) = x(r + stride * q);
      y = s * y;
      for (std::size_t q = 0; q < len; ++q) x(r + stride * q) = y(q);
    }
  }
  return plan.ordering == Ordering::subband ? reorder(plan, x) : x;
}

/// perm[i] = position of interleaved coefficient i in subband order.
/// Each split sends a block's even entries to its front half and odd entries
/// to its back half; the pyramid recurses into the front half only.
inline std::vector<std::size_t> subband_permutation(const TransformPlan& plan) {
  plan.validate();
  std::vector<std::size_t> order(plan.length);
  std::iota(order.begin(), order.end(), 0);
  // Blocks of `order` still to be split at the current level.
  std::vector<std::pair<std::size_t, std::size_t>> blocks{{0, plan.length}};
  for (std::size_t j = 1; j <= plan.depth; ++j) {
    std::vector<std::pair<std::size_t, std::size_t>> next;
    for (auto [start, len] : blocks) {
      std::vector<std::size_t> tmp;
      tmp.reserve(len);
      for (std::size_t i = 0; i < len; i += 2) tmp.push_back(order[start + i]);
      for (std::size_t i = 1; i < len; i += 2) tmp.push_back(order[start + i]);
      std::copy(tmp.begin(), tmp.end(), order.begin() + static_cast<std::ptrdiff_t>(start));
      next.push_back({start, len / 2});
      if (plan.kind == TransformKind::packet) next.push_back({start + len / 2, len / 2});
    }
    blocks = std::move(next);
  }
  std::vector<std::size_t> perm(plan.length);
  for (std::size_t pos = 0; pos < plan.length; ++pos) perm[order[pos]] = pos;
  return perm;
}

inline CVector reorder(const TransformPlan& plan, const CVector& coeffs) {
  const auto perm = subband_permutation(plan);
  CVector out(coeffs.size());
  for (std::size_t i = 0; i < perm.size(); ++i) out(perm[i]) = coeffs(i);
  return out;
}

// ---------------------------------------------------------------------------
// Lattice factorization.

struct LatticeFactorization {
  std::vector<double> angles;  // t_1 .. t_K, t_1 applied first
  std::size_t shift = 0;       // even cyclic shift applied to the input taps
  bool alpha_negated = false;
  bool beta_negated = false;
};

namespace detail {

// 2x2 matrix polynomial in z^-1, coefficient d at index d.
using PolyMatrix = std::vector<Eigen::Matrix2d>;

inline PolyMatrix polyphase(const std::vector<double>& a, const std::vector<double>& b) {
  const std::size_t k = (std::max(a.size(), b.size()) + 1) / 2;
  PolyMatrix p(k, Eigen::Matrix2d::Zero());
  for (std::size_t n = 0; n < a.size(); ++n) p[n / 2](n % 2, 0) = a[n];
  for (std::size_t n = 0; n < b.size(); ++n) p[n / 2](n % 2, 1) = b[n];
  return p;
}

// Coefficients of det P(z) = a_e b_o - a_o b_e.
inline std::vector<double> polyphase_det(const PolyMatrix& p) {
  std::vector<double> det(2 * p.size() - 1, 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      det[i + j] += p[i](0, 0) * p[j](1, 1) - p[i](1, 0) * p[j](0, 1);
    }
  }
  return det;
}

}  // namespace detail

/// Applies the lattice normalization (see file comment) to a real pair.
/// The returned pair has tap length 2K covering the support exactly.
inline QmfPair normalize(const QmfPair& pair, LatticeFactorization* record = nullptr) {
  detail::check_period(pair.period);
  const std::size_t p = pair.period;
  auto a = pair.alpha_mod(p);
  auto b = pair.beta_mod(p);
  double scale = 0.0;
  for (std::size_t i = 0; i < p; ++i) scale = std::max({scale, std::abs(a[i]), std::abs(b[i])});
  auto nonzero = [&](cplx v) { return std::abs(v) > 1e-14 * scale; };

  // Cyclic support of alpha: start after the longest zero gap, pushed down to
  // an even index so the shift commutes with the pair structure.
  std::size_t best_gap = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < p; ++i) {
    if (!nonzero(a[i])) continue;
    std::size_t gap = 0;
    while (gap < p && !nonzero(a[(i + p - 1 - gap) % p])) ++gap;
    if (gap > best_gap) {
      best_gap = gap;
      start = i;
    }
  }
  start -= start % 2;
  std::rotate(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(start), a.end());
  std::rotate(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(start), b.end());

  std::size_t last = 0;
  for (std::size_t i = 0; i < p; ++i) {
    if (nonzero(a[i]) || nonzero(b[i])) last = i;
  }
  const std::size_t len = std::min(p, last + 1 + ((last + 1) % 2));
  a.resize(len);
  b.resize(len);

  LatticeFactorization rec;
  rec.shift = start;
  cplx sum = std::accumulate(a.begin(), a.end(), cplx{0.0});
  double sign_ref = sum.real();
  if (std::abs(sign_ref) <= 1e-12) {
    for (auto v : a) {
      if (nonzero(v)) {
        sign_ref = v.real();
        break;
      }
    }
  }
  if (sign_ref < 0) {
    for (auto& v : a) v = -v;
    rec.alpha_negated = true;
  }

  std::vector<double> ar(len), br(len);
  for (std::size_t i = 0; i < len; ++i) {
    ar[i] = a[i].real();
    br[i] = b[i].real();
  }
  const auto det = detail::polyphase_det(detail::polyphase(ar, br));
  const auto lead = *std::max_element(det.begin(), det.end(),
                                      [](double x, double y) { return std::abs(x) < std::abs(y); });
  if (lead < 0) {
    for (auto& v : b) v = -v;
    rec.beta_negated = true;
  }
  if (record) *record = rec;
  return QmfPair{a, b, p};
}

/// Peels planar rotations off the polyphase matrix, highest degree first.
///
/// Requires a real QMF pair. Throws FactorizationError when the pair is not
/// a lattice product after normalization; on finite periods some QMF systems
/// are genuinely outside this parametrization, so that outcome is expected
/// for them.
inline LatticeFactorization lattice_factor(const QmfPair& pair) {
  for (const auto* taps : {&pair.alpha, &pair.beta}) {
    for (auto v : *taps) {
      if (std::abs(v.imag()) > 1e-12) throw FactorizationError("lattice_factor needs real taps");
    }
  }
  const auto check = qmf_check(pair);
  if (!check.pass) {
    throw FactorizationError("pair is not a QMF system (residual " +
                             std::to_string(check.residual) + ")");
  }
  LatticeFactorization rec;
  const QmfPair norm = normalize(pair, &rec);
  std::vector<double> a(norm.alpha.size()), b(norm.beta.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = norm.alpha[i].real();
  for (std::size_t i = 0; i < b.size(); ++i) b[i] = norm.beta[i].real();
  auto poly = detail::polyphase(a, b);

  auto fail = [](double r) {
    return FactorizationError(
        "pair is not reachable by rotations and delays (peeling residual " +
        std::to_string(r) + "); finite-period QMF systems outside the lattice "
        "parametrization exist, so this is not necessarily a bug");
  };

  std::vector<double> peeled;  // t_K first
  while (poly.size() > 1) {
    const auto& top = poly.back();
    const int col = top.col(0).norm() >= top.col(1).norm() ? 0 : 1;
    const double theta = std::atan2(top(0, col), top(1, col));
    const Eigen::Matrix2d rt = rotation_matrix(theta).real().transpose();
    for (auto& c : poly) c = rt * c;
    const double resid =
        std::max(poly.back().row(0).cwiseAbs().maxCoeff(), poly.front().row(1).cwiseAbs().maxCoeff());
    if (resid > kPeelTol) throw fail(resid);
    // Undo the delay on the second row.
    detail::PolyMatrix next(poly.size() - 1, Eigen::Matrix2d::Zero());
    for (std::size_t d = 0; d + 1 < poly.size(); ++d) {
      next[d].row(0) = poly[d].row(0);
      next[d].row(1) = poly[d + 1].row(1);
    }
    poly = std::move(next);
    peeled.push_back(theta);
  }
  const Eigen::Matrix2d& last = poly.front();
  const double theta = std::atan2(last(0, 1), last(0, 0));
  const double resid = (last - rotation_matrix(theta).real()).cwiseAbs().maxCoeff();
  if (resid > kPeelTol) throw fail(resid);
  peeled.push_back(theta);

  rec.angles.assign(peeled.rbegin(), peeled.rend());
  return rec;
}

// ---------------------------------------------------------------------------
// Named filters.

/// Haar pair alpha = (1, 1)/sqrt2, beta = (1, -1)/sqrt2.
inline QmfPair haar_pair(std::size_t period = 2) {
  const double r = 1.0 / std::numbers::sqrt2;
  return QmfPair{{r, r}, {r, -r}, period};
}

inline SplitWord haar_word() { return SplitWord{{rotation_step(hadamard_matrix())}}; }

/// Angles (t_1, t_2) of the two-stage lattice whose lowpass has two
/// vanishing moments, i.e. the Daubechies-4 pair.
///
/// With the stages R(t_1), D, R(t_2) the lowpass taps are
/// (c1 c2, -c1 s2, -s1 s2, -s1 c2). sum (-1)^n alpha_n = cos(t) + sin(t)
/// for t = t_1 + t_2 vanishes at t = -pi/4; the first moment
/// c1 s2 - 2 s1 s2 + 3 s1 c2 is then a function of t_1 alone, and its root
/// in (0, pi/4) is found by bisection.
inline std::vector<double> daubechies4_angles() {
  constexpr double sum = -std::numbers::pi / 4;
  auto first_moment = [](double t1) {
    const double t2 = sum - t1;
    const double c1 = std::cos(t1), s1 = std::sin(t1);
    const double c2 = std::cos(t2), s2 = std::sin(t2);
    return c1 * s2 - 2 * s1 * s2 + 3 * s1 * c2;
  };
  double lo = 0.0, hi = std::numbers::pi / 4;
  for (int it = 0; it < 200 && hi - lo > 1e-17; ++it) {
    const double mid = 0.5 * (lo + hi);
    ((first_moment(lo) < 0) == (first_moment(mid) < 0) ? lo : hi) = mid;
  }
  const double t1 = 0.5 * (lo + hi);
  return {t1, sum - t1};
}

}  // namespace qwt
