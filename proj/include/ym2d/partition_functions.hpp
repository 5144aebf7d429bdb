#pragma once

// Yang-Mills partition functions of U(N) and SU(N) on compact surfaces, their
// large-N limits (theta value, partition generating products) and the
// identities and splittings used to study them.
//
// Three evaluation paths, chosen by the exponent e of the dimension:
//   e < 0  walk weights by dimension (as for the Witten zeta function);
//   e = 0  torus and Klein bottle: the weight is encoded by partitions
//          (alpha, beta), the Casimir number splits through total contents,
//          and per-size sums come from a row-by-row transfer;
//   e > 0  sphere and projective plane: not treated.
// With q = exp(-T / 2) the unitary sums reduce to the special unitary ones
// through c_2(l + n) = c'_2(l) + (n + |l| / N)^2, i.e. a shifted theta sum
// per weight.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "ym2d/error.hpp"
#include "ym2d/frobenius.hpp"
#include "ym2d/highest_weight.hpp"
#include "ym2d/numeric.hpp"
#include "ym2d/partition.hpp"
#include "ym2d/witten_zeta.hpp"

namespace ym2d {

enum class ProductVariant { squared, even };

struct SurfaceSpec {
  bool orientable = true;
  int genus = 2;
  double area = 1.0;
  GroupKind group = GroupKind::special_unitary;
  std::size_t N = 2;

  /// 2 - 2g (orientable) or 2 - g (connected sum of g projective planes).
  int dimension_exponent() const noexcept {
    return orientable ? 2 - 2 * genus : 2 - genus;
  }
};

struct TruncationParams {
  /// Exact summation over |alpha| + |beta| <= k_max (torus, Klein bottle).
  std::int64_t k_max = 60;
  /// Cap on |n| in the shift sums; 0 picks one from T.
  std::int64_t n_max = 0;
  /// Exponent of the four-way split in s_decomposition.
  double gamma = 0.3;
  /// Dimension cutoff for the e < 0 path.
  std::uint64_t dim_cutoff = 100000;
};

inline double q_from_area(double T) {
  require(std::isfinite(T) && T >= 0.0, ErrorKind::NonPositiveArea,
          "area must be finite and non-negative");
  return std::exp(-0.5 * T);
}

inline double area_from_q(double q) {
  require(std::isfinite(q) && q > 0.0 && q <= 1.0, ErrorKind::InvalidQ,
          "q must lie in (0, 1]");
  return -2.0 * std::log(q);
}

// ---------------------------------------------------------------------------
// Theta sums and products

namespace detail {

/// 1 + 2 sum_{n >= 1} q^{n^2}; past n the rest is at most
/// 2 q^{(n+1)^2} / (1 - q^{2n+3}).
inline BoundedValue theta_from_q(double q) {
  require(q > 0.0 && q < 1.0, ErrorKind::InvalidQ, "q must lie in (0, 1)");
  const double lq = std::log(q);
  CompensatedSum acc;
  acc += 1.0;
  double n = 1.0;
  for (;; n += 1.0) {
    acc += 2.0 * std::exp(lq * n * n);
    if (std::exp(lq * (n + 1.0) * (n + 1.0)) < 1e-18 * acc.value()) break;
  }
  const double tail =
      2.0 * std::exp(lq * (n + 1.0) * (n + 1.0)) / (1.0 - std::exp(lq * (2.0 * n + 3.0)));
  return BoundedValue::from_partial(acc.value(), tail);
}

inline std::int64_t auto_n_max(double q) {
  // q^{n^2} below 1e-17 of the leading term
  const double t = std::log(1e17) / -std::log(q);
  return static_cast<std::int64_t>(std::ceil(std::sqrt(t))) + 2;
}

}  // namespace detail

/// Encloses sum_{n in Z} exp(-T n^2 / 2).
inline BoundedValue theta_value(double T) {
  require(std::isfinite(T) && T > 0.0, ErrorKind::NonPositiveArea, "theta needs T > 0");
  return detail::theta_from_q(q_from_area(T));
}

/// Encloses S(x) = sum_{n in Z} q^{(n + x)^2}. Summed over |n| <= n_max around
/// the origin (n_max = 0 picks one from q); the two remainders are at most
/// q^{K^2} / (1 - q^{2K+1}) each with K = n_max.
inline BoundedValue shift_sum(double x, double q, std::int64_t n_max = 0) {
  require(q > 0.0 && q < 1.0, ErrorKind::InvalidQ, "q must lie in (0, 1)");
  require(n_max >= 0, ErrorKind::InvalidArgument, "n_max must be >= 0");
  if (n_max == 0) n_max = detail::auto_n_max(q);
  const double f = x - std::floor(x);
  const double lq = std::log(q);
  CompensatedSum acc;
  for (std::int64_t n = -n_max; n <= n_max; ++n) {
    const double y = static_cast<double>(n) + f;
    acc += std::exp(lq * y * y);
  }
  const double K = static_cast<double>(n_max);
  const double side = std::exp(lq * K * K) / (1.0 - std::exp(lq * (2.0 * K + 1.0)));
  return BoundedValue::from_partial(acc.value(), 2.0 * side);
}

/// prod (1 - q^m)^{-2} (squared) or prod (1 - q^{2m})^{-1} (even).
inline BoundedValue partition_product(double q, ProductVariant variant) {
  require(std::isfinite(q) && q > 0.0 && q < 1.0, ErrorKind::InvalidQ,
          "q must lie in (0, 1)");
  const BoundedValue lg =
      variant == ProductVariant::squared ? log_euler_product(q) : log_euler_product(q * q);
  const double k = variant == ProductVariant::squared ? 2.0 : 1.0;
  return {std::exp(k * lg.lower) * (1.0 - kRoundingSlack),
          std::exp(k * lg.upper) * (1.0 + kRoundingSlack)};
}

/// Encloses prod_{m >= 1} (1 - q^{2m}) (1 + q^{2m-1})^2 through its logarithm.
/// After M factors the first product's log remainder lies in
/// [-y^{M+1} / ((1 - y)(1 - y^{M+1})), 0] (y = q^2), the second's in
/// [0, 2 q^{2M+1} / (1 - q^2)].
inline BoundedValue jacobi_triple_product_rhs(double q) {
  require(std::isfinite(q) && q > 0.0 && q < 1.0, ErrorKind::InvalidQ,
          "q must lie in (0, 1)");
  const double y = q * q;
  CompensatedSum lg;
  double ym = 1.0;   // y^m
  double qodd = 1.0 / q;  // q^{2m-1}
  double neg = 0.0, pos = 0.0;
  for (int m = 1;; ++m) {
    ym *= y;
    qodd *= y;
    lg += std::log1p(-ym) + 2.0 * std::log1p(qodd);
    const double ynext = ym * y;
    neg = ynext / ((1.0 - y) * (1.0 - ynext));
    pos = 2.0 * qodd * y / (1.0 - y);
    if (neg + pos < 1e-19) break;
  }
  const double L = lg.value();
  const double slack = 1e-15 * (std::fabs(L) + 1.0);
  return {std::exp(L - neg - slack) * (1.0 - kRoundingSlack),
          std::exp(L + pos + slack) * (1.0 + kRoundingSlack)};
}

/// Largest possible |sum q^{n^2} - prod (1 - q^{2m})(1 + q^{2m-1})^2| given the
/// two enclosures; at most the sum of their widths when they intersect.
inline double jacobi_triple_product_check(double q) {
  return max_distance(detail::theta_from_q(q), jacobi_triple_product_rhs(q));
}

// ---------------------------------------------------------------------------
// Regime checks

namespace detail {

inline void check_surface(const SurfaceSpec& s) {
  require(s.N >= 1, ErrorKind::InvalidArgument, "N must be >= 1");
  require(s.genus >= 0, ErrorKind::InvalidArgument, "genus must be >= 0");
  require(s.orientable || s.genus >= 1, ErrorKind::InvalidArgument,
          "a non-orientable surface needs at least one cross-cap");
  require(std::isfinite(s.area) && s.area >= 0.0, ErrorKind::NonPositiveArea,
          "area must be finite and non-negative");
  const int e = s.dimension_exponent();
  if (e > 0) {
    fail(ErrorKind::UnsupportedRegime, s.orientable ? "the sphere is not treated"
                                                    : "the projective plane is not treated");
  }
  if (s.area == 0.0) {
    if (s.group == GroupKind::unitary) {
      fail(ErrorKind::UnsupportedRegime, "T = 0 with U(N): the shift sum diverges");
    }
    if (e == 0) {
      fail(ErrorKind::UnsupportedRegime, "T = 0 with exponent 0: the sum diverges");
    }
    if (e == -1) {
      fail(ErrorKind::UnsupportedRegime,
           "T = 0 with three cross-caps: the sum is not absolutely convergent");
    }
  }
}

inline void check_truncation(const TruncationParams& t) {
  require(t.k_max >= 0, ErrorKind::InvalidArgument, "k_max must be >= 0");
  require(t.n_max >= 0, ErrorKind::InvalidArgument, "n_max must be >= 0");
  require(t.dim_cutoff >= 1, ErrorKind::InvalidArgument, "dimension cutoff must be >= 1");
}

/// Sizes beyond k_max up to this bound get a per-cell bound; the rest a
/// separable one. Constant for k_max <= 180 so that enclosures nest as k_max
/// grows.
inline std::int64_t far_cutoff(std::int64_t k_max) {
  return std::max<std::int64_t>(400, 2 * k_max + 40);
}

/// Upper bound on theta(q), loosened so that it dominates every shift-sum
/// enclosure after clamping.
inline double theta_cap(double q) { return theta_from_q(q).upper * (1.0 + 1e-12); }

/// S(r / den) for integer r, cached by residue. Upper ends are clamped to
/// theta_cap(q), valid since S(x) <= S(0) termwise after Poisson summation.
class ShiftSumCache {
 public:
  ShiftSumCache(double q, std::int64_t n_max, std::int64_t den)
      : q_(q), n_max_(n_max), den_(den), cap_(theta_cap(q)) {}

  const BoundedValue& at(std::int64_t r) {
    const std::int64_t key = ((r % den_) + den_) % den_;
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const double x = static_cast<double>(key) / static_cast<double>(den_);
    const BoundedValue v = shift_sum(x, q_, n_max_);
    return cache_.emplace(key, BoundedValue{v.lower, std::min(v.upper, cap_)}).first->second;
  }

  double cap() const noexcept { return cap_; }

 private:
  double q_;
  std::int64_t n_max_;
  std::int64_t den_;
  double cap_;
  std::map<std::int64_t, BoundedValue> cache_;
};

struct CellOptions {
  std::int64_t k_max = 0;
  std::int64_t k_far = 0;
  bool unitary = false;
  std::int64_t n_max = 0;
};

/// Torus, Z'_N(1, T) or Z_N(1, T). With L1 = M1, L2 = M2 row caps,
///   c'_2 = [a + 2K(alpha)/N - a^2/N^2] + [b + 2K(beta)/N - b^2/N^2] + 2ab/N^2.
/// cell(a, b, lo, hi) receives exact cells (a + b <= k_max) and bounded cells
/// (lo = 0, up to k_far); the returned value bounds everything beyond k_far.
template <class Cell>
double torus_cells(std::size_t N, double q, const CellOptions& o, Cell&& cell) {
  const auto [M1, M2] = decomposition_caps(N);
  const auto L1 = static_cast<std::int64_t>(M1), L2 = static_cast<std::int64_t>(M2);
  const double Nd = static_cast<double>(N);
  const double lq = std::log(q);
  const auto f1 = content_weighted_sums(o.k_max, L1, q, 1.0, 2.0 / Nd, 1.0 / (Nd * Nd));
  const auto f2 = content_weighted_sums(o.k_max, L2, q, 1.0, 2.0 / Nd, 1.0 / (Nd * Nd));
  std::optional<ShiftSumCache> shifts;
  double theta_up = 1.0;
  if (o.unitary) {
    shifts.emplace(q, o.n_max, static_cast<std::int64_t>(N));
    theta_up = shifts->cap();
  }
  for (std::int64_t a = 0; a <= o.k_max; ++a) {
    if (f1.counts[a] == 0.0) continue;
    for (std::int64_t b = 0; a + b <= o.k_max; ++b) {
      if (f2.counts[b] == 0.0) continue;
      const double v = f1.weighted[a] * f2.weighted[b] *
                       std::exp(lq * 2.0 * static_cast<double>(a * b) / (Nd * Nd));
      if (o.unitary) {
        const auto& s = shifts->at(a - b);
        cell(a, b, v * s.lower, v * s.upper);
      } else {
        cell(a, b, v, v);
      }
    }
  }
  const auto c1 = partition_counts_max_length(o.k_far, L1);
  const auto c2 = partition_counts_max_length(o.k_far, L2);
  for (std::int64_t a = 0; a <= o.k_far; ++a) {
    if (c1[a] == 0.0) continue;
    const double ka = static_cast<double>(min_total_content(a, L1));
    for (std::int64_t b = std::max<std::int64_t>(0, o.k_max + 1 - a); a + b <= o.k_far; ++b) {
      if (c2[b] == 0.0) continue;
      const double kb = static_cast<double>(min_total_content(b, L2));
      const double k = static_cast<double>(a + b);
      const double diff = static_cast<double>(a - b);
      const double emin = k + 2.0 * (ka + kb) / Nd - diff * diff / (Nd * Nd);
      cell(a, b, 0.0, c1[a] * c2[b] * std::exp(lq * std::max(emin, 0.5 * k)) * theta_up);
    }
  }
  // c'_2 >= (a + b) / 2, and a + b > k_far forces a > H or b > H.
  const std::int64_t H = o.k_far / 2;
  const double x = std::sqrt(q);
  const double U = std::exp(log_euler_product(x).upper);
  const double tail = partition_tail_bound(H, x);
  const double U1 = L1 == 0 ? 1.0 : U, U2 = L2 == 0 ? 1.0 : U;
  const double t1 = L1 == 0 ? 0.0 : tail, t2 = L2 == 0 ? 0.0 : tail;
  return (t1 * U2 + U1 * t2) * theta_up;
}

/// Klein bottle, N = 2M + 1: only alpha = beta contributes, with
/// c'_2 = 2a + 4K(alpha)/N and at most M rows.
template <class Cell>
double klein_odd_cells(std::size_t N, double q, const CellOptions& o, Cell&& cell) {
  const auto M = static_cast<std::int64_t>(N / 2);
  const double Nd = static_cast<double>(N);
  const double lq = std::log(q);
  const std::int64_t A = o.k_max / 2;
  const auto f = content_weighted_sums(A, M, q, 2.0, 4.0 / Nd);
  double theta_lo = 1.0, theta_up = 1.0;
  if (o.unitary) {
    ShiftSumCache shifts(q, o.n_max, 1);
    theta_lo = shifts.at(0).lower;
    theta_up = shifts.cap();
  }
  for (std::int64_t a = 0; a <= A; ++a) {
    if (f.counts[a] == 0.0) continue;
    cell(a, a, f.weighted[a] * theta_lo, f.weighted[a] * theta_up);
  }
  const std::int64_t A_far = o.k_far / 2;
  const auto c = partition_counts_max_length(A_far, M);
  for (std::int64_t a = A + 1; a <= A_far; ++a) {
    if (c[a] == 0.0) continue;
    const double ad = static_cast<double>(a);
    const double emin = 2.0 * ad + 4.0 * static_cast<double>(min_total_content(a, M)) / Nd;
    cell(a, a, 0.0, c[a] * std::exp(lq * std::max(emin, ad)) * theta_up);
  }
  return partition_tail_bound(A_far, q) * theta_up;
}

/// Klein bottle, N = 2M: beta = (alpha_1 + t, ..., alpha_{M-1} + t, t) with
/// alpha of at most M - 1 rows and t >= 0, and
///   c'_2 = 2a + Mt/2 + t^2/4 + (4K(alpha) + 2ta)/N.
/// cell receives (a, |beta|, lo, hi).
template <class Cell>
double klein_even_cells(std::size_t N, double q, const CellOptions& o, Cell&& cell) {
  const auto M = static_cast<std::int64_t>(N / 2);
  const std::int64_t L = M - 1;
  const double Nd = static_cast<double>(N);
  const double Md = static_cast<double>(M);
  const double lq = std::log(q);
  const auto f = content_weighted_sums(o.k_max / 2, L, q, 2.0, 4.0 / Nd);
  std::optional<ShiftSumCache> shifts;
  double theta_up = 1.0;
  if (o.unitary) {
    shifts.emplace(q, o.n_max, 2);
    theta_up = shifts->cap();
  }
  auto t_exponent = [&](std::int64_t t, std::int64_t a) {
    const double td = static_cast<double>(t);
    return Md * td / 2.0 + td * td / 4.0 + 2.0 * td * static_cast<double>(a) / Nd;
  };
  for (std::int64_t t = 0; M * t <= o.k_max; ++t) {
    for (std::int64_t a = 0; 2 * a + M * t <= o.k_max; ++a) {
      if (f.counts[a] == 0.0) continue;
      const double v = f.weighted[a] * std::exp(lq * t_exponent(t, a));
      if (o.unitary) {
        const auto& s = shifts->at(t);
        cell(a, a + M * t, v * s.lower, v * s.upper);
      } else {
        cell(a, a + M * t, v, v);
      }
    }
  }
  const auto c = partition_counts_max_length(o.k_far / 2, L);
  for (std::int64_t t = 0; M * t <= o.k_far; ++t) {
    for (std::int64_t a = 0; 2 * a + M * t <= o.k_far; ++a) {
      if (2 * a + M * t <= o.k_max || c[a] == 0.0) continue;
      const double k = static_cast<double>(2 * a + M * t);
      const double emin = 2.0 * static_cast<double>(a) + t_exponent(t, a) +
                          4.0 * static_cast<double>(min_total_content(a, L)) / Nd;
      cell(a, a + M * t, 0.0, c[a] * std::exp(lq * std::max(emin, 0.5 * k)) * theta_up);
    }
  }
  // c'_2 >= a + Mt/2 + t^2/4; 2a + Mt > k_far forces a > k_far/4 or
  // t > k_far/(2M).
  const std::int64_t A0 = o.k_far / 4;
  const std::int64_t T0 = o.k_far / (2 * M);
  const double g = 1.0 / (1.0 - std::exp(lq * Md / 2.0));
  const double t1 = static_cast<double>(T0 + 1);
  const double V = g;
  const double V_tail = std::exp(lq * (Md * t1 / 2.0 + t1 * t1 / 4.0)) * g;
  const double U = L == 0 ? 1.0 : std::exp(log_euler_product(q).upper);
  const double U_tail = L == 0 ? 0.0 : partition_tail_bound(A0, q);
  return (U_tail * V + U * V_tail) * theta_up;
}

template <class Cell>
double pair_cells(const SurfaceSpec& s, double q, const CellOptions& o, Cell&& cell) {
  if (s.orientable) return torus_cells(s.N, q, o, cell);
  if (s.N % 2 == 1) return klein_odd_cells(s.N, q, o, cell);
  return klein_even_cells(s.N, q, o, cell);
}

inline BoundedValue pair_path(const SurfaceSpec& s, const TruncationParams& t) {
  const double q = q_from_area(s.area);
  const CellOptions o{t.k_max, far_cutoff(t.k_max), s.group == GroupKind::unitary, t.n_max};
  CompensatedSum lo, hi;
  const double far = pair_cells(s, q, o, [&](std::int64_t, std::int64_t, double l, double h) {
    lo += l;
    hi += h;
  });
  return {lo.value() * (1.0 - kRoundingSlack), (hi.value() + far) * (1.0 + kRoundingSlack)};
}

BoundedValue dimension_path(const SurfaceSpec& s, const TruncationParams& t);

}  // namespace detail

/// Certified enclosure of Z_N(g, T), Z'_N(g, T), Z^-_N(g, T) or Z'^-_N(g, T).
inline BoundedValue z_value(const SurfaceSpec& s, const TruncationParams& t) {
  detail::check_surface(s);
  detail::check_truncation(t);
  if (s.N == 1) {
    if (s.group == GroupKind::special_unitary) return BoundedValue::exact(1.0);
    return shift_sum(0.0, q_from_area(s.area), t.n_max);
  }
  if (s.dimension_exponent() == 0) return detail::pair_path(s, t);
  return detail::dimension_path(s, t);
}

namespace detail {

/// Sum over weights with d <= dim_cutoff of q^{c'_2} d^e iota^g (times the
/// shift sum for U(N)). The rest is bounded by the smaller of the summed cut
/// bounds of the zeta walk at s = -e (needs s > 1) and, for T > 0,
/// (D + 1)^e times the torus mass not already summed.
inline BoundedValue dimension_path(const SurfaceSpec& s, const TruncationParams& t) {
  const std::size_t N = s.N;
  const int e = s.dimension_exponent();
  const double sd = -static_cast<double>(e);
  const bool unitary = s.group == GroupKind::unitary;
  const bool signed_terms = !s.orientable && s.genus % 2 == 1;
  const double q = q_from_area(s.area);
  const double lq = s.area > 0.0 ? std::log(q) : 0.0;

  std::optional<ShiftSumCache> shifts;
  double theta_up = 1.0;
  if (unitary) {
    shifts.emplace(q, t.n_max, static_cast<std::int64_t>(N));
    theta_up = shifts->cap();
  }
  std::vector<double> rest;
  if (sd > 1.0) rest = remaining_row_products(N, sd);

  CompensatedSum lo, hi, mag, qmass, cut_total;
  std::vector<std::int64_t> entries(N, 0), labels(N - 1, 0);
  walk_dimension_lattice(
      N, static_cast<double>(t.dim_cutoff),
      [&](std::span<const std::int64_t> m, double d) {
        std::int64_t total = 0;
        for (std::size_t i = N - 1; i-- > 0;) {
          entries[i] = entries[i + 1] + m[i] - 1;
          labels[i] = m[i] - 1;
          total += entries[i];
        }
        const double w = std::exp(lq * casimir_su_value(entries));
        qmass += w;
        int sign = 1;
        if (!s.orientable) {
          const int iota = indicator(classify_labels(labels));
          if (iota == 0) return;
          if (signed_terms) sign = iota;
        }
        const double term = w * inv_pow(d, sd);
        double t_lo = term, t_hi = term;
        if (unitary) {
          const auto& sh = shifts->at(total);
          t_lo = term * sh.lower;
          t_hi = term * sh.upper;
        }
        mag += t_hi;
        if (sign > 0) {
          lo += t_lo;
          hi += t_hi;
        } else {
          lo += -t_hi;
          hi += -t_lo;
        }
      },
      [&](std::size_t k, double p, double w, std::int64_t m_star) {
        if (sd > 1.0) {
          cut_total += inv_pow(p, sd) * cut_geometric_factor(w * sd, m_star) * rest[k];
        }
      });

  double tail = std::numeric_limits<double>::infinity();
  if (sd > 1.0) tail = cut_total.value() * (1.0 + 1e-9);
  if (s.area > 0.0) {
    const SurfaceSpec torus{true, 1, s.area, GroupKind::special_unitary, N};
    const double total_mass = pair_path(torus, t).upper;
    const double excluded = std::max(0.0, total_mass - qmass.value() * (1.0 - kRoundingSlack));
    const double D1 = static_cast<double>(t.dim_cutoff) + 1.0;
    tail = std::min(tail, std::exp(static_cast<double>(e) * std::log(D1)) * excluded);
  }
  tail *= theta_up;
  if (!std::isfinite(tail)) {
    fail(ErrorKind::CutoffTooSmall, "no finite bound for the weights beyond the cutoff");
  }
  const double slack = kRoundingSlack * mag.value();
  const double lower = lo.value() - slack - (signed_terms ? tail : 0.0);
  return {lower, hi.value() + slack + tail};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Four-way split by |alpha|, |beta| against N^gamma

struct SDecomposition {
  std::array<BoundedValue, 4> parts;
  double n_gamma = 0.0;
  /// Bounds on S_1 from |c'_2 - |alpha| - |beta|| <= 4N^{2gamma-1} + 4N^{2gamma-2}
  /// (special unitary torus only).
  std::optional<BoundedValue> sandwich;

  BoundedValue total() const { return parts[0] + parts[1] + parts[2] + parts[3]; }
  bool sandwich_holds() const {
    return sandwich && parts[0].lower >= sandwich->lower && parts[0].upper <= sandwich->upper;
  }
};

/// S_1..S_4 over the weights with (|alpha| <= N^gamma, |beta| <= N^gamma),
/// (>, <=), (<=, >), (>, >). Torus (orientable genus 1) or Klein bottle
/// (two cross-caps), T > 0.
inline SDecomposition s_decomposition(const SurfaceSpec& s, const TruncationParams& t) {
  detail::check_surface(s);
  detail::check_truncation(t);
  const bool torus = s.orientable && s.genus == 1;
  const bool klein = !s.orientable && s.genus == 2;
  if (!(torus || klein) || s.area <= 0.0) {
    fail(ErrorKind::UnsupportedRegime,
         "the split is defined for the torus and the Klein bottle with T > 0");
  }
  require(t.gamma > 0.0 && t.gamma < 0.5, ErrorKind::InvalidArgument,
          "gamma must lie in (0, 1/2)");
  const std::size_t N = s.N;
  const double Nd = static_cast<double>(N);
  const double G = std::pow(Nd, t.gamma);
  const auto Gf = static_cast<std::int64_t>(std::floor(G));
  std::int64_t cap = 0;
  if (torus) {
    cap = static_cast<std::int64_t>(decomposition_caps(N).first);
  } else {
    cap = static_cast<std::int64_t>(N / 2) - (N % 2 == 0 ? 1 : 0);
  }
  if (Gf > cap) {
    fail(ErrorKind::AmbientTooSmall,
         "partitions of size <= N^gamma do not fit the row caps at this N");
  }
  const double q = q_from_area(s.area);
  const std::int64_t k_max = std::max(t.k_max, 2 * Gf);
  const detail::CellOptions o{k_max, std::max(detail::far_cutoff(k_max), 2 * Gf + 1),
                              s.group == GroupKind::unitary, t.n_max};
  std::array<CompensatedSum, 4> lo, hi;
  const double far =
      detail::pair_cells(s, q, o, [&](std::int64_t a, std::int64_t b, double l, double h) {
        const int cls = (a > Gf ? 1 : 0) + (b > Gf ? 2 : 0);
        lo[cls] += l;
        hi[cls] += h;
      });
  SDecomposition out;
  out.n_gamma = G;
  for (int i = 0; i < 4; ++i) {
    // cells beyond k_far all lie outside the first class
    const double extra = i == 0 ? 0.0 : far;
    out.parts[i] = {lo[i].value() * (1.0 - kRoundingSlack),
                    (hi[i].value() + extra) * (1.0 + kRoundingSlack)};
  }
  if (torus && s.group == GroupKind::special_unitary) {
    const auto p = partition_counts(Gf);
    CompensatedSum acc;
    for (std::int64_t a = 0; a <= Gf; ++a) {
      for (std::int64_t b = 0; b <= Gf; ++b) {
        acc += to_double(p[a]) * to_double(p[b]) * std::pow(q, static_cast<double>(a + b));
      }
    }
    const double e1 = 4.0 * std::pow(Nd, 2.0 * t.gamma - 1.0);
    const double e2 = 4.0 * std::pow(Nd, 2.0 * t.gamma - 2.0);
    // shrunk inwards by the rounding slack so the check stays conservative
    out.sandwich = BoundedValue{std::pow(q, e1 + e2) * acc.value() * (1.0 + kRoundingSlack),
                                std::pow(q, -e1) * acc.value() * (1.0 - kRoundingSlack)};
  }
  return out;
}

// ---------------------------------------------------------------------------
// Large-N limits and scans

/// Limit as N -> infinity: theta (U) or 1 (SU) for orientable genus >= 2 and
/// for three or more cross-caps; times prod (1 - q^m)^{-2} on the torus and
/// prod (1 - q^{2m})^{-1} on the Klein bottle. s.N is ignored.
inline BoundedValue limit_value(const SurfaceSpec& s, std::int64_t n_max = 0) {
  require(s.genus >= 0 && (s.orientable || s.genus >= 1), ErrorKind::InvalidArgument,
          "invalid genus");
  require(std::isfinite(s.area) && s.area >= 0.0, ErrorKind::NonPositiveArea,
          "area must be finite and non-negative");
  const int e = s.dimension_exponent();
  if (e > 0) {
    fail(ErrorKind::UnsupportedRegime, s.orientable ? "the sphere is not treated"
                                                    : "the projective plane is not treated");
  }
  const bool unitary = s.group == GroupKind::unitary;
  if (s.area == 0.0) {
    if (unitary) fail(ErrorKind::UnsupportedRegime, "T = 0 with U(N) diverges");
    if (e == 0) fail(ErrorKind::UnsupportedRegime, "T = 0 with exponent 0 diverges");
    return BoundedValue::exact(1.0);
  }
  const double q = q_from_area(s.area);
  const BoundedValue th = unitary ? shift_sum(0.0, q, n_max) : BoundedValue::exact(1.0);
  if (e < 0) return th;
  return th * partition_product(q, s.orientable ? ProductVariant::squared
                                                : ProductVariant::even);
}

struct ConvergenceRow {
  std::size_t N = 0;
  BoundedValue z;
  BoundedValue limit;
  /// Certified upper and lower bounds on |Z_N - limit|.
  double gap_upper = 0.0;
  double gap_lower = 0.0;
};

/// One row per distinct N, ascending.
inline std::vector<ConvergenceRow> convergence_table(SurfaceSpec s, std::vector<std::size_t> Ns,
                                                     const TruncationParams& t) {
  std::sort(Ns.begin(), Ns.end());
  Ns.erase(std::unique(Ns.begin(), Ns.end()), Ns.end());
  const BoundedValue lim = limit_value(s, t.n_max);
  std::vector<ConvergenceRow> rows;
  for (std::size_t N : Ns) {
    s.N = N;
    const BoundedValue z = z_value(s, t);
    rows.push_back({N, z, lim, max_distance(z, lim), min_distance(z, lim)});
  }
  return rows;
}

enum class MonotoneVerdict { confirmed, inconclusive, violated };

constexpr const char* to_string(MonotoneVerdict v) noexcept {
  switch (v) {
    case MonotoneVerdict::confirmed: return "confirmed";
    case MonotoneVerdict::inconclusive: return "inconclusive";
    case MonotoneVerdict::violated: return "violated";
  }
  return "?";
}

struct MonotoneStep {
  std::size_t N_from = 0;
  std::size_t N_to = 0;
  BoundedValue z_from;
  BoundedValue z_to;
  MonotoneVerdict verdict = MonotoneVerdict::inconclusive;
};

struct MonotonicityReport {
  std::vector<MonotoneStep> steps;
  std::size_t confirmed = 0;
  std::size_t inconclusive = 0;
  std::size_t violated = 0;
};

/// Checks Z(N') <= Z(N) for consecutive N < N' of the range on an orientable
/// surface: violated when Z(N').lower > Z(N).upper, confirmed when
/// Z(N').upper <= Z(N).lower, inconclusive otherwise.
inline MonotonicityReport monotonicity_scan(int genus, double T, std::vector<std::size_t> Ns,
                                            GroupKind group, const TruncationParams& t) {
  std::sort(Ns.begin(), Ns.end());
  Ns.erase(std::unique(Ns.begin(), Ns.end()), Ns.end());
  MonotonicityReport r;
  std::vector<BoundedValue> z;
  for (std::size_t N : Ns) z.push_back(z_value({true, genus, T, group, N}, t));
  for (std::size_t i = 1; i < Ns.size(); ++i) {
    MonotoneStep st{Ns[i - 1], Ns[i], z[i - 1], z[i], MonotoneVerdict::inconclusive};
    if (z[i].lower > z[i - 1].upper) {
      st.verdict = MonotoneVerdict::violated;
      ++r.violated;
    } else if (z[i].upper <= z[i - 1].lower) {
      st.verdict = MonotoneVerdict::confirmed;
      ++r.confirmed;
    } else {
      ++r.inconclusive;
    }
    r.steps.push_back(st);
  }
  return r;
}

/// With N = 2M, alpha = beta_reduction(beta, M) and l = l_N(alpha, beta):
/// exact check of M^M d_l >= (M + beta_M)^M d_alpha d_beta~, the last two as
/// SU(M) dimensions.
inline bool genus3_dimension_bound_check(const Partition& beta, std::size_t M) {
  require(M >= 1, ErrorKind::InvalidArgument, "M must be >= 1");
  if (beta.length() > M) {
    fail(ErrorKind::AmbientTooSmall, "beta needs at most M rows");
  }
  const Partition alpha = beta_reduction(beta, M);
  const HighestWeight l = build_su_weight(alpha, beta, 2 * M);
  auto su_m = [M](const Partition& p) {
    std::vector<std::int64_t> e(M, 0);
    for (std::size_t i = 0; i < p.length(); ++i) e[i] = p.part(i + 1);
    return HighestWeight(std::move(e), GroupKind::special_unitary);
  };
  const BigInt Mb = static_cast<std::int64_t>(M);
  const BigInt Mt = Mb + beta.part(M);
  const BigInt lhs = boost::multiprecision::pow(Mb, static_cast<unsigned>(M)) * dimension_exact(l);
  const BigInt rhs = boost::multiprecision::pow(Mt, static_cast<unsigned>(M)) *
                     dimension_exact(su_m(alpha)) * dimension_exact(su_m(alpha));
  return lhs >= rhs;
}

}  // namespace ym2d
