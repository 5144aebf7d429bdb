#pragma once

// Witten zeta function of SU(N), zeta(s) = sum over SU(N) highest weights of
// d^{-s}, with certified two-sided bounds.
//
// Weights are walked in the coordinates m_k = l_k - l_{k+1} + 1 >= 1, where
//   d = prod_{i<j} (m_i + ... + m_{j-1}) / (j - i).
// Fixing m_1..m_k fixes the factors for all pairs (i, j) with j <= k + 1; that
// partial product is the dimension of a smaller weight and only grows as more
// coordinates are fixed, so a subtree can be cut as soon as it exceeds the
// cutoff. Each cut carries an explicit bound on the mass it discards.

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "ym2d/error.hpp"
#include "ym2d/highest_weight.hpp"
#include "ym2d/numeric.hpp"

namespace ym2d {

struct ZetaQuery {
  std::size_t N = 2;
  double s = 2.0;
  std::uint64_t dim_cutoff = 1000;
};

/// Enclosure together with the cutoff that produced it.
struct ZetaResult {
  BoundedValue value;
  std::uint64_t dim_cutoff = 0;
};

namespace detail {

inline void require_s(double s) {
  require(std::isfinite(s) && s > 1.0, ErrorKind::InvalidArgument,
          "s must exceed 1");
}

/// Upper bound for sum_{n >= k} C(n, k)^{-s}. Explicit terms until the
/// remainder bound (k!)^s (K - k + 3/2)^{1 - ks} / (ks - 1), from
/// C(n, k) >= (n - k + 1)^k / k!, is negligible.
inline double binomial_row_sum_uncached(std::size_t k, double s) {
  const double kd = static_cast<double>(k);
  const double ks = kd * s;
  const double log_kfact = std::lgamma(kd + 1.0);
  auto remainder = [&](double K) {
    return std::exp(s * log_kfact + (1.0 - ks) * std::log(K - kd + 1.5)) / (ks - 1.0);
  };
  CompensatedSum acc;
  double log_c = 0.0;  // log C(n, k)
  const std::uint64_t n_max = k + 2000000;
  double tail = 0.0;
  for (std::uint64_t n = k;; ++n) {
    if (n > k) {
      log_c += std::log(static_cast<double>(n) / static_cast<double>(n - k));
    }
    acc += std::exp(-s * log_c);
    if ((n - k) % 64 == 63 || n == n_max) {
      tail = remainder(static_cast<double>(n));
      if (tail < 1e-17 * acc.value() || n == n_max) break;
    }
  }
  const double partial = acc.value();
  return 1.0 + ((partial - 1.0) + tail) * (1.0 + 1e-9);
}

}  // namespace detail

/// Certified upper bound for sum_{n >= k} C(n, k)^{-s}, cached per (k, s).
inline double binomial_row_sum(std::size_t k, double s) {
  detail::require_s(s);
  require(k >= 1, ErrorKind::InvalidArgument, "binomial_row_sum needs k >= 1");
  static std::mutex mu;
  static std::map<std::pair<std::size_t, double>, double> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({k, s});
    if (it != cache.end()) return it->second;
  }
  const double v = detail::binomial_row_sum_uncached(k, s);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::make_pair(k, s), v);
  return v;
}

/// prod_{k=1}^{N-1} sum_{n >= k} C(n, k)^{-s}, an upper bound for zeta(s).
inline double product_upper_bound(std::size_t N, double s) {
  detail::require_s(s);
  require(N >= 1, ErrorKind::InvalidArgument, "N must be >= 1");
  double p = 1.0;
  for (std::size_t k = 1; k < N; ++k) p *= binomial_row_sum(k, s);
  return p;
}

/// Majorant 2^{-s} + sum_{n>=3} (2 n^{-s} + (n-3) 2^s n^{-s} (n-1)^{-s}) of
/// sum_{k>=1} sum_{n>k} C(n, k)^{-s}; explicit to n = 10^5, integral bounds
/// beyond.
inline double binom_double_tail(double s) {
  detail::require_s(s);
  constexpr std::int64_t K = 100000;
  const double two_s = std::exp2(s);
  CompensatedSum acc;
  acc += std::exp2(-s);
  for (std::int64_t n = 3; n <= K; ++n) {
    const double nd = static_cast<double>(n);
    const double a = inv_pow(nd, s);
    acc += 2.0 * a + (nd - 3.0) * two_s * a * inv_pow(nd - 1.0, s);
  }
  const double Kd = static_cast<double>(K);
  // (n - 3) n^{-s} (n - 1)^{-s} <= (n - 1)^{1 - 2s}
  const double tail = 2.0 * power_tail_upper(Kd, s) +
                      two_s * std::exp((2.0 - 2.0 * s) * std::log(Kd - 0.5)) /
                          (2.0 * s - 2.0);
  return (acc.value() + tail) * (1.0 + 1e-12);
}

/// Depth-first walk over SU(N) weights with dimension <= dim_cutoff.
///
/// leaf(m, d) receives the coordinates m_1..m_{N-1} (each >= 1) and the
/// dimension (exact when below 2^53). cut(k, p, w, m_star) reports that all
/// weights sharing the current prefix with m_k >= m_star were skipped: p is
/// the partial product at m_k = m_star and w the exponent in
///   F_k(m) >= F_k(m_star) (m / m_star)^w,  m >= m_star,
/// where F_k is the factor contributed by the pairs (i, k + 1).
template <class Leaf, class Cut>
void walk_dimension_lattice(std::size_t N, double dim_cutoff, Leaf&& leaf, Cut&& cut) {
  require(N >= 1, ErrorKind::InvalidArgument, "N must be >= 1");
  require(dim_cutoff >= 1.0, ErrorKind::InvalidArgument, "dimension cutoff must be >= 1");
  if (N == 1) {
    leaf(std::span<const std::int64_t>(), 1.0);
    return;
  }
  // Guard against rounding in the partial products: never cut a subtree whose
  // true product could still be within the cutoff.
  const double limit = dim_cutoff * (1.0 + 1e-9);
  const std::size_t depth_max = N - 1;
  std::vector<std::int64_t> m(depth_max, 1);
  // sig[i] = m_i + ... + m_{k-1} at depth k (0-based i < k - 1).
  std::vector<std::int64_t> sig(depth_max, 0);

  auto factor = [&](std::size_t k, std::int64_t mk) {
    // k is 1-based depth; pairs (i, k + 1), i = 1..k.
    double f = 1.0;
    for (std::size_t i = 1; i < k; ++i) {
      f *= static_cast<double>(sig[i - 1] + mk) / static_cast<double>(k - i + 1);
    }
    return f * static_cast<double>(mk);
  };
  auto exponent = [&](std::size_t k, std::int64_t ms) {
    double w = 1.0;
    const auto msd = static_cast<double>(ms);
    for (std::size_t i = 1; i < k; ++i) w += msd / static_cast<double>(sig[i - 1] + ms);
    return w;
  };

  auto rec = [&](auto& self, std::size_t k, double p_prev) -> void {
    std::int64_t mk = 1;
    for (;; ++mk) {
      const double p = p_prev * factor(k, mk);
      if (p > limit) {
        cut(k, p, exponent(k, mk), mk);
        return;
      }
      m[k - 1] = mk;
      if (k == depth_max) {
        const double d = p < 9007199254740992.0 ? std::nearbyint(p) : p;
        leaf(std::span<const std::int64_t>(m), d);
      } else {
        for (std::size_t i = 0; i + 1 < k; ++i) sig[i] += mk;
        sig[k - 1] = mk;
        self(self, k + 1, p);
        for (std::size_t i = 0; i + 1 < k; ++i) sig[i] -= mk;
        sig[k - 1] = 0;
      }
    }
  };
  rec(rec, 1, 1.0);
}

/// Calls fn(lambda, d) for every SU(N) highest weight of dimension at most
/// dim_cutoff, exactly once, with the exact dimension.
template <class Fn>
void enumerate_weights_by_dimension(std::size_t N, std::uint64_t dim_cutoff, Fn&& fn) {
  const BigInt cap = dim_cutoff;
  walk_dimension_lattice(
      N, static_cast<double>(dim_cutoff),
      [&](std::span<const std::int64_t> m, double) {
        const HighestWeight l = weight_from_m(m);
        BigInt d = dimension_exact(l);
        if (d <= cap) fn(l, d);
      },
      [](std::size_t, double, double, std::int64_t) {});
}

/// Mass skipped by one cut at depth k is at most
///   p^{-s} cut_geometric_factor(w s, m*) prod_{k' > k} S_{k'}(s),
/// with S_k the binomial row sums: the remaining factors are at least
/// C(m + k' - 1, k') each, and along m_k the factor grows at least like m^w.
inline double cut_geometric_factor(double ws, std::int64_t m_star) {
  const double ms = static_cast<double>(m_star);
  return 1.0 + (ms + 0.5) * std::exp(ws * std::log(ms / (ms + 0.5))) / (ws - 1.0);
}

/// rest[k] = prod_{k' = k + 1}^{N - 1} S_{k'}(s), k = 0..N.
inline std::vector<double> remaining_row_products(std::size_t N, double s) {
  std::vector<double> rest(N + 1, 1.0);
  for (std::size_t k = N; k-- > 1;) {
    rest[k] = rest[k + 1] * (k + 1 < N ? binomial_row_sum(k + 1, s) : 1.0);
  }
  rest[0] = rest[1] * (N > 1 ? binomial_row_sum(1, s) : 1.0);
  return rest;
}

/// D^{-(s - s')} exp(binom_double_tail(s')) with s' = (1 + s) / 2; for N = 2
/// also the Riemann tail sum_{n > D} n^{-s}. The smaller one is returned.
inline double tail_bound(const ZetaQuery& q) {
  detail::require_s(q.s);
  require(q.N >= 1 && q.dim_cutoff >= 1, ErrorKind::InvalidArgument,
          "zeta query needs N >= 1 and a positive cutoff");
  if (q.N == 1) return 0.0;
  const double sp = 0.5 * (1.0 + q.s);
  const double D = static_cast<double>(q.dim_cutoff);
  double t = std::exp(-(q.s - sp) * std::log(D) + binom_double_tail(sp));
  if (q.N == 2) t = std::min(t, power_tail_upper(D, q.s));
  return t;
}

/// lower = sum of d^{-s} over weights with d <= dim_cutoff; upper adds the
/// smaller of the summed cut bounds and tail_bound(q).
inline BoundedValue zeta_su(const ZetaQuery& q) {
  detail::require_s(q.s);
  require(q.N >= 1 && q.dim_cutoff >= 1, ErrorKind::InvalidArgument,
          "zeta query needs N >= 1 and a positive cutoff");
  CompensatedSum sum, cut_total;
  const double s = q.s;
  const auto rest = remaining_row_products(q.N, s);
  walk_dimension_lattice(
      q.N, static_cast<double>(q.dim_cutoff),
      [&](std::span<const std::int64_t>, double d) { sum += inv_pow(d, s); },
      [&](std::size_t k, double p, double w, std::int64_t m_star) {
        cut_total += inv_pow(p, s) * cut_geometric_factor(w * s, m_star) * rest[k];
      });
  const double tail = std::min(cut_total.value() * (1.0 + 1e-9), tail_bound(q));
  if (!std::isfinite(tail)) {
    fail(ErrorKind::CutoffTooSmall, "zeta tail bound is not finite");
  }
  return BoundedValue::from_partial(sum.value(), tail);
}

/// Raises the cutoff geometrically until the enclosure width is at most
/// target_width.
inline ZetaResult zeta_su_to_width(std::size_t N, double s, double target_width,
                                   std::uint64_t start_cutoff = 1000,
                                   std::uint64_t max_cutoff = std::uint64_t{1} << 40) {
  require(target_width > 0.0, ErrorKind::InvalidArgument, "target width must be positive");
  std::uint64_t D = std::max<std::uint64_t>(start_cutoff, 1);
  while (true) {
    const auto v = zeta_su({N, s, D});
    if (v.width() <= target_width) return {v, D};
    if (D >= max_cutoff) {
      fail(ErrorKind::CutoffTooSmall, "target width not reached below the maximal cutoff");
    }
    D = std::min(max_cutoff, D * 4);
  }
}

}  // namespace ym2d
