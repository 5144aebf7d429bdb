#pragma once

// Integer partitions: the canonical value type, enumeration, counting, total
// content, and content-weighted generating sums over length-capped partitions.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "ym2d/error.hpp"
#include "ym2d/numeric.hpp"

namespace ym2d {

/// Non-increasing sequence of positive integers, stored without trailing
/// zeros. The empty partition has size 0 and length 0.
class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are stripped; anything else out of order is rejected.
  explicit Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      require(parts_[i] > 0, ErrorKind::InvalidArgument,
              "partition parts must be positive");
      require(i == 0 || parts_[i] <= parts_[i - 1], ErrorKind::InvalidArgument,
              "partition parts must be non-increasing");
    }
  }
  Partition(std::initializer_list<std::int64_t> parts)
      : Partition(std::vector<std::int64_t>(parts)) {}

  std::span<const std::int64_t> parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  std::int64_t size() const noexcept {
    std::int64_t s = 0;
    for (auto p : parts_) s += p;
    return s;
  }
  /// 1-based part access; parts beyond the length read as 0.
  std::int64_t part(std::size_t i) const noexcept {
    return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) os << ',';
      os << parts_[i];
    }
    os << ')';
    return os.str();
  }

 private:
  std::vector<std::int64_t> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << p.to_string();
}

/// Sum of j - i over the boxes (i, j) of the Young diagram, via the row
/// closed form sum_i [a_i (a_i + 1) / 2 - i a_i].
inline std::int64_t total_content(const Partition& alpha) {
  std::int64_t k = 0;
  std::int64_t i = 1;
  for (auto a : alpha.parts()) {
    k += a * (a + 1) / 2 - i * a;
    ++i;
  }
  return k;
}

namespace detail {

template <class Fn>
void partitions_rec(std::int64_t remaining, std::int64_t max_part,
                    std::size_t max_length, std::vector<std::int64_t>& buf,
                    Fn& fn) {
  if (remaining == 0) {
    fn(buf);
    return;
  }
  if (buf.size() >= max_length) return;
  for (std::int64_t p = std::min(remaining, max_part); p >= 1; --p) {
    buf.push_back(p);
    partitions_rec(remaining - p, p, max_length, buf, fn);
    buf.pop_back();
  }
}

}  // namespace detail

/// Calls fn(parts) for every partition of n with at most max_length parts,
/// in lexicographically decreasing order. parts is a transient view.
template <class Fn>
void for_each_partition_of(std::int64_t n, Fn&& fn,
                           std::size_t max_length = SIZE_MAX) {
  require(n >= 0, ErrorKind::InvalidArgument, "partition size must be >= 0");
  std::vector<std::int64_t> buf;
  auto emit = [&](const std::vector<std::int64_t>& parts) {
    fn(std::span<const std::int64_t>(parts));
  };
  detail::partitions_rec(n, n, max_length, buf, emit);
}

/// Every partition of size <= max_size exactly once: sizes ascending,
/// lexicographically decreasing within a size.
inline std::vector<Partition> enumerate_partitions(std::int64_t max_size,
                                                   std::size_t max_length = SIZE_MAX) {
  require(max_size >= 0, ErrorKind::InvalidArgument, "max_size must be >= 0");
  std::vector<Partition> out;
  for (std::int64_t n = 0; n <= max_size; ++n) {
    for_each_partition_of(
        n,
        [&](std::span<const std::int64_t> parts) {
          out.emplace_back(std::vector<std::int64_t>(parts.begin(), parts.end()));
        },
        max_length);
  }
  return out;
}

/// Exact p(0..n_max) from Euler's pentagonal number recurrence.
inline std::vector<BigInt> partition_counts(std::int64_t n_max) {
  std::vector<BigInt> p(static_cast<std::size_t>(n_max) + 1);
  p[0] = 1;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    BigInt acc = 0;
    for (std::int64_t k = 1;; ++k) {
      const std::int64_t g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      const bool plus = (k % 2) == 1;
      const std::int64_t g2 = k * (3 * k + 1) / 2;
      BigInt term = p[n - g1];
      if (g2 <= n) term += p[n - g2];
      if (plus) acc += term; else acc -= term;
    }
    p[n] = acc;
  }
  return p;
}

/// Number of partitions of n = 0..n_max with at most max_length parts, as
/// doubles (exact while below 2^53).
inline std::vector<double> partition_counts_max_length(std::int64_t n_max,
                                                       std::int64_t max_length) {
  require(n_max >= 0 && max_length >= 0, ErrorKind::InvalidArgument,
          "partition count caps must be non-negative");
  std::vector<double> c(static_cast<std::size_t>(n_max) + 1, 0.0);
  c[0] = 1.0;
  // adding the allowed part sizes 1..max_length one at a time (conjugation)
  for (std::int64_t part = 1; part <= std::min(max_length, n_max); ++part) {
    for (std::int64_t n = part; n <= n_max; ++n) c[n] += c[n - part];
  }
  return c;
}

/// Classical bound p(n) < exp(pi sqrt(2n/3)), returned as its logarithm.
inline double log_partition_count_bound(std::int64_t n) {
  return std::numbers::pi * std::sqrt(2.0 * static_cast<double>(n) / 3.0);
}

/// Upper bound for sum_{n > A} p(n) x^n, 0 < x < 1, using the exponential
/// bound on p(n); once the (decreasing) ratio exp(c / (2 sqrt n)) x of
/// consecutive majorant terms drops below sqrt(x) the rest is geometric.
inline double partition_tail_bound(std::int64_t A, double x) {
  require(x > 0.0 && x < 1.0, ErrorKind::InvalidQ, "x must lie in (0, 1)");
  const double c = std::numbers::pi * std::sqrt(2.0 / 3.0);
  const double lx = std::log(x);
  const double rho_stop = std::sqrt(x);
  CompensatedSum acc;
  for (std::int64_t n = A + 1;; ++n) {
    const double t = std::exp(c * std::sqrt(static_cast<double>(n)) + n * lx);
    const double rho = std::exp(c / (2.0 * std::sqrt(static_cast<double>(n))) + lx);
    if (rho <= rho_stop) {
      acc += t / (1.0 - rho);
      break;
    }
    acc += t;
  }
  return acc.value();
}

/// Enclosure of -sum_{m >= 1} log(1 - x^m), the logarithm of the partition
/// generating function at x in (0, 1). The remainder after M terms is at most
/// x^{M+1} / ((1 - x)(1 - x^{M+1})).
inline BoundedValue log_euler_product(double x) {
  require(x > 0.0 && x < 1.0, ErrorKind::InvalidQ, "q must lie in (0, 1)");
  CompensatedSum acc;
  double xm = 1.0;
  std::int64_t m = 0;
  double tail = 0.0;
  while (true) {
    ++m;
    xm *= x;
    acc += -std::log1p(-xm);
    const double next = xm * x;
    tail = next / ((1.0 - x) * (1.0 - next));
    if (tail < 1e-18 * acc.value() || next == 0.0) break;
  }
  const double s = acc.value();
  return {s * (1.0 - kRoundingSlack), (s + tail) * (1.0 + kRoundingSlack)};
}

/// The dominance-minimal partition of a with at most L rows (rows as equal as
/// possible) has the smallest total content among them.
inline std::int64_t min_total_content(std::int64_t a, std::int64_t L) {
  require(a >= 0 && L >= 0, ErrorKind::InvalidArgument,
          "min_total_content needs a, L >= 0");
  if (a == 0) return 0;
  require(L >= 1, ErrorKind::InvalidArgument, "no partition of a > 0 with 0 rows");
  const std::int64_t rows = std::min(a, L);
  const std::int64_t q = a / rows;
  const std::int64_t r = a % rows;
  std::int64_t k = 0;
  for (std::int64_t i = 1; i <= rows; ++i) {
    const std::int64_t len = q + (i <= r ? 1 : 0);
    k += len * (len + 1) / 2 - i * len;
  }
  return k;
}

/// Per-size sums over partitions alpha with at most max_length rows:
///   weighted[a] = sum_{|alpha| = a} q^{size_coef a + content_coef K(alpha)
///                                         - square_coef a^2}
///   counts[a]   = number of such partitions.
struct ContentWeightedSums {
  std::vector<double> weighted;
  std::vector<double> counts;
};

/// Row-by-row transfer over (size, last row length). Every intermediate state
/// is itself a partition with <= max_length rows, so when the caller's
/// exponent is non-negative on such partitions no state exceeds its count.
inline ContentWeightedSums content_weighted_sums(std::int64_t max_size,
                                                 std::int64_t max_length, double q,
                                                 double size_coef,
                                                 double content_coef,
                                                 double square_coef = 0.0) {
  require(max_size >= 0 && max_length >= 0, ErrorKind::InvalidArgument,
          "content_weighted_sums needs non-negative caps");
  require(q > 0.0 && q <= 1.0, ErrorKind::InvalidQ, "q must lie in (0, 1]");
  const auto A = static_cast<std::size_t>(max_size);
  const std::size_t W = A + 1;
  const double lq = std::log(q);
  ContentWeightedSums out;
  out.weighted.assign(W, 0.0);
  out.counts.assign(W, 0.0);
  out.weighted[0] = 1.0;
  out.counts[0] = 1.0;
  const std::int64_t rows = std::min<std::int64_t>(max_length, max_size);
  if (rows == 0) return out;

  auto scaled = [lq](double base, double exponent) {
    if (base == 0.0) return 0.0;
    const double w = std::exp(exponent * lq);
    if (std::isfinite(w) && w < 1e300) return base * w;
    return std::exp(std::log(base) + exponent * lq);
  };
  auto row_exponent = [&](std::int64_t i, std::int64_t len, std::int64_t before) {
    const double l = static_cast<double>(len);
    const double s = static_cast<double>(before);
    return size_coef * l +
           content_coef * (l * (l + 1.0) / 2.0 - static_cast<double>(i) * l) -
           square_coef * ((s + l) * (s + l) - s * s);
  };

  // cur[s * W + l]: weight of partitions with exactly i rows, size s, last row l.
  std::vector<double> cur(W * W, 0.0), cnt(W * W, 0.0);
  for (std::size_t l = 1; l <= A; ++l) {
    cur[l * W + l] = scaled(1.0, row_exponent(1, static_cast<std::int64_t>(l), 0));
    cnt[l * W + l] = 1.0;
  }
  auto accumulate = [&]() {
    for (std::size_t s = 1; s <= A; ++s) {
      CompensatedSum ws, cs;
      for (std::size_t l = 1; l <= s; ++l) {
        ws += cur[s * W + l];
        cs += cnt[s * W + l];
      }
      out.weighted[s] += ws.value();
      out.counts[s] += cs.value();
    }
  };
  accumulate();

  std::vector<double> next(W * W), next_cnt(W * W);
  for (std::int64_t i = 2; i <= rows; ++i) {
    std::fill(next.begin(), next.end(), 0.0);
    std::fill(next_cnt.begin(), next_cnt.end(), 0.0);
    bool any = false;
    for (std::size_t s = 1; s <= A; ++s) {
      // suffix sums over the last row length of the i-1 row states at size s
      double suf = 0.0, suf_cnt = 0.0;
      for (std::size_t l = s; l >= 1; --l) {
        suf += cur[s * W + l];
        suf_cnt += cnt[s * W + l];
        if (s + l <= A && suf_cnt > 0.0) {
          next[(s + l) * W + l] =
              scaled(suf, row_exponent(i, static_cast<std::int64_t>(l),
                                       static_cast<std::int64_t>(s)));
          next_cnt[(s + l) * W + l] = suf_cnt;
          any = true;
        }
      }
    }
    cur.swap(next);
    cnt.swap(next_cnt);
    if (!any) break;
    accumulate();
  }
  return out;
}

}  // namespace ym2d
