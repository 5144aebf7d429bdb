#pragma once

// Slow, independent evaluations used to audit the combinatorial fast paths:
// Weyl characters as alternant ratios, Frobenius-Schur indicators by exact
// quadrature on the maximal torus, literal Casimir sums and the N = 2, 3
// Witten zeta sums in closed coordinates.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

#include "ym2d/error.hpp"
#include "ym2d/frobenius.hpp"
#include "ym2d/highest_weight.hpp"
#include "ym2d/numeric.hpp"

namespace ym2d {

using Complex = std::complex<double>;

namespace detail {

/// Determinant by Gaussian elimination with partial pivoting; a is n x n,
/// row-major, and is overwritten.
inline Complex determinant(std::vector<Complex>& a, std::size_t n) {
  Complex det = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(a[r * n + c]) > std::abs(a[piv * n + c])) piv = r;
    }
    if (a[piv * n + c] == 0.0) return 0.0;
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[c * n + k], a[piv * n + k]);
      det = -det;
    }
    det *= a[c * n + c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Complex f = a[r * n + c] / a[c * n + c];
      for (std::size_t k = c; k < n; ++k) a[r * n + k] -= f * a[c * n + k];
    }
  }
  return det;
}

/// det(exp(i e_j theta_k)) for exponents e.
inline Complex alternant(std::span<const double> exps, std::span<const double> angles) {
  const std::size_t n = angles.size();
  std::vector<Complex> a(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) a[j * n + k] = std::polar(1.0, exps[j] * angles[k]);
  }
  return determinant(a, n);
}

/// Alternant ratio into out; false when the Vandermonde factor is too small
/// to divide by safely.
inline bool alternant_ratio(const HighestWeight& lambda, std::span<const double> angles,
                            Complex& out, double min_den = 1e-6) {
  const std::size_t N = angles.size();
  std::vector<double> top(N), bottom(N);
  for (std::size_t j = 0; j < N; ++j) {
    const double rho = static_cast<double>(N - 1 - j);
    top[j] = static_cast<double>(lambda[j + 1]) + rho;
    bottom[j] = rho;
  }
  const Complex den = alternant(bottom, angles);
  if (std::abs(den) < min_den) return false;
  out = alternant(top, angles) / den;
  return true;
}

}  // namespace detail

/// Weyl character chi_lambda at diag(exp(i theta_1), ..., exp(i theta_N)).
/// Near coincident angles the value is extrapolated from the perturbed
/// angles theta_k + k h, h -> 0, with a Neville table.
inline Complex character_at(const HighestWeight& lambda, std::span<const double> angles) {
  const std::size_t N = lambda.rank();
  require(angles.size() == N, ErrorKind::InvalidArgument, "need one angle per entry");
  Complex direct;
  if (detail::alternant_ratio(lambda, angles, direct)) return direct;

  constexpr int levels = 9;
  std::vector<double> hs;
  std::vector<Complex> table;
  std::vector<double> shifted(angles.begin(), angles.end());
  double h = 0.1;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  Complex prev_best(nan, nan);
  for (int l = 0; l < levels; ++l, h *= 0.5) {
    for (std::size_t k = 0; k < N; ++k) shifted[k] = angles[k] + static_cast<double>(k) * h;
    Complex v;
    if (!detail::alternant_ratio(lambda, shifted, v, 1e-14)) break;
    hs.push_back(h);
    table.push_back(v);
    // Neville: table[i] becomes the extrapolant through points i..l
    for (int i = l - 1; i >= 0; --i) {
      table[i] = table[i + 1] + (table[i + 1] - table[i]) * hs[l] / (hs[i] - hs[l]);
    }
    const Complex best = table[0];
    if (l >= 2 && std::abs(best - prev_best) <= 1e-8 * std::max(1.0, std::abs(best))) {
      return best;
    }
    prev_best = best;
  }
  fail(ErrorKind::DegenerateAngles, "character extrapolation did not stabilize");
}

// ---------------------------------------------------------------------------
// Frobenius-Schur indicator by quadrature

struct TorusGrid {
  std::size_t N = 1;
  std::size_t points_per_angle = 4;
  GroupKind group = GroupKind::special_unitary;
};

/// Points per angle for which the trapezoid rule integrates chi(t^2)|Delta|^2
/// exactly: frequencies stay below 2(l_1 - l_N) + 2N.
inline std::size_t required_points(const HighestWeight& lambda) {
  const auto e = lambda.entries();
  const auto N = static_cast<std::int64_t>(e.size());
  std::int64_t max_abs = 0;
  for (auto x : e) max_abs = std::max(max_abs, x < 0 ? -x : x);
  const std::int64_t spread = e.front() - e.back();
  return static_cast<std::size_t>(std::max(2 * max_abs * N + 4, 4 * spread + 4 * N + 5));
}

inline TorusGrid grid_for(const HighestWeight& lambda) {
  return {lambda.rank(), required_points(lambda), lambda.group()};
}

/// (1/N!) mean over the grid of chi(t^2) |Delta(t)|^2. For SU(N) the last
/// angle is minus the sum of the others.
inline double fs_quadrature_value(const HighestWeight& lambda, const TorusGrid& grid) {
  const std::size_t N = lambda.rank();
  require(grid.N == N, ErrorKind::InvalidArgument, "grid rank differs from the weight");
  require(grid.points_per_angle >= required_points(lambda), ErrorKind::InvalidArgument,
          "grid too coarse for exact quadrature");
  const std::size_t P = grid.points_per_angle;
  const bool special = grid.group == GroupKind::special_unitary;
  const std::size_t free = special ? N - 1 : N;
  const double step = 2.0 * std::numbers::pi / static_cast<double>(P);
  std::vector<std::size_t> idx(free, 0);
  std::vector<double> theta(N, 0.0), doubled(N, 0.0);
  CompensatedSum re;
  std::size_t nodes = 0;
  while (true) {
    double total = 0.0;
    for (std::size_t k = 0; k < free; ++k) {
      theta[k] = step * static_cast<double>(idx[k]);
      total += theta[k];
    }
    if (special && N >= 1) theta[N - 1] = -total;
    double vand = 1.0;  // |Delta(t)|^2
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = i + 1; j < N; ++j) {
        const double d = 2.0 * std::sin(0.5 * (theta[i] - theta[j]));
        vand *= d * d;
      }
    }
    ++nodes;
    if (vand > 1e-24) {
      for (std::size_t k = 0; k < N; ++k) doubled[k] = 2.0 * theta[k];
      re += (character_at(lambda, doubled) * vand).real();
    }
    std::size_t k = 0;
    while (k < free && ++idx[k] == P) idx[k++] = 0;
    if (k == free) break;
  }
  double fact = 1.0;
  for (std::size_t i = 2; i <= N; ++i) fact *= static_cast<double>(i);
  return re.value() / (static_cast<double>(nodes) * fact);
}

inline int fs_quadrature(const HighestWeight& lambda, const TorusGrid& grid) {
  const double v = fs_quadrature_value(lambda, grid);
  const double r = std::nearbyint(v);
  if (std::fabs(v - r) > 1e-6) {
    fail(ErrorKind::QuadratureUnstable, "quadrature value is not close to an integer");
  }
  return static_cast<int>(r);
}

inline int fs_quadrature(const HighestWeight& lambda) {
  return fs_quadrature(lambda, grid_for(lambda));
}

struct FsMismatch {
  HighestWeight lambda;
  int rule = 0;
  int quadrature = 0;
};

struct UnitaryFsDiagnostic {
  std::size_t checked = 0;
  std::vector<FsMismatch> mismatches;
};

/// Compares the shift-invariant rule with quadrature over the full U(N) torus
/// for all U(N) weights with entries in [-entry_bound, entry_bound],
/// N = 1..N_max. Disagreements are collected, not treated as errors.
inline UnitaryFsDiagnostic unitary_fs_diagnostic(std::size_t N_max = 3,
                                                 std::int64_t entry_bound = 2) {
  UnitaryFsDiagnostic out;
  for (std::size_t N = 1; N <= N_max; ++N) {
    std::vector<std::int64_t> e(N);
    auto rec = [&](auto& self, std::size_t i, std::int64_t cap) -> void {
      if (i == N) {
        const HighestWeight l(e, GroupKind::unitary);
        const int rule = fs_indicator(l);
        const int quad = fs_quadrature(l);
        ++out.checked;
        if (rule != quad) out.mismatches.push_back({l, rule, quad});
        return;
      }
      for (std::int64_t v = -entry_bound; v <= cap; ++v) {
        e[i] = v;
        self(self, i + 1, v);
      }
    };
    rec(rec, 0, entry_bound);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Casimir numbers and small-rank zeta values

/// Pair-by-pair evaluation of the defining Casimir sums.
inline Rational casimir_bruteforce(const HighestWeight& lambda, GroupKind variant) {
  const auto e = lambda.entries();
  const auto N = static_cast<std::int64_t>(e.size());
  Rational sq = 0, gaps = 0, total = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    sq += Rational(BigInt(e[i]) * e[i]);
    total += Rational(e[i]);
    for (std::size_t j = i + 1; j < e.size(); ++j) gaps += Rational(e[i] - e[j]);
  }
  Rational c = (sq + gaps) / Rational(N);
  if (variant == GroupKind::special_unitary) c -= total * total / Rational(N * N);
  return c;
}

/// N = 2: sum_{m >= 1} m^{-s}. N = 3: sum_{m1, m2 >= 1} (m1 m2 (m1 + m2) / 2)^{-s}.
/// Explicit over m <= cutoff (each coordinate); the N = 3 remainder uses
/// m2 (m1 + m2) >= m1 m2, so each strip m1 > K is at most
/// 2^s K-tail(2s) zeta(s) and the two strips are added.
inline BoundedValue zeta_small_n_closed(std::size_t N, double s, std::int64_t cutoff = 2000) {
  require(N == 2 || N == 3, ErrorKind::InvalidArgument, "closed form only for N = 2, 3");
  require(std::isfinite(s) && s > 1.0, ErrorKind::InvalidArgument, "s must exceed 1");
  require(cutoff >= 1, ErrorKind::InvalidArgument, "cutoff must be >= 1");
  const double K = static_cast<double>(cutoff);
  CompensatedSum acc;
  if (N == 2) {
    for (std::int64_t m = 1; m <= cutoff; ++m) acc += inv_pow(static_cast<double>(m), s);
    return {acc.value() * (1.0 - kRoundingSlack) + power_tail_lower(K, s),
            (acc.value() + power_tail_upper(K, s)) * (1.0 + kRoundingSlack)};
  }
  for (std::int64_t a = 1; a <= cutoff; ++a) {
    for (std::int64_t b = 1; b <= cutoff; ++b) {
      const double d = static_cast<double>(a) * static_cast<double>(b) *
                       static_cast<double>(a + b) / 2.0;
      acc += inv_pow(d, s);
    }
  }
  const double zeta_s = 1.0 + 1.0 / (s - 1.0);
  const double tail = 2.0 * std::exp2(s) * zeta_s * power_tail_upper(K, 2.0 * s);
  return BoundedValue::from_partial(acc.value(), tail);
}

}  // namespace ym2d
