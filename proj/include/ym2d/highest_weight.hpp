#pragma once

// Highest weights of U(N) and SU(N): construction from a pair of partitions
// and a shift, the parity-normalized decomposition, Weyl dimensions and
// quadratic Casimir numbers.

#include <cmath>
#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ym2d/error.hpp"
#include "ym2d/numeric.hpp"
#include "ym2d/partition.hpp"

namespace ym2d {

enum class GroupKind { unitary, special_unitary };

constexpr const char* to_string(GroupKind g) noexcept {
  return g == GroupKind::unitary ? "u" : "su";
}

/// Non-increasing integer N-tuple. A special_unitary weight has last entry 0.
class HighestWeight {
 public:
  HighestWeight(std::vector<std::int64_t> entries, GroupKind group)
      : entries_(std::move(entries)), group_(group) {
    require(!entries_.empty(), ErrorKind::InvalidArgument,
            "a highest weight needs N >= 1 entries");
    for (std::size_t i = 1; i < entries_.size(); ++i) {
      require(entries_[i] <= entries_[i - 1], ErrorKind::InvalidArgument,
              "highest weight entries must be non-increasing");
    }
    if (group_ == GroupKind::special_unitary) {
      require(entries_.back() == 0, ErrorKind::InvalidArgument,
              "special unitary highest weight must end with 0");
    }
  }

  static HighestWeight zero(std::size_t N, GroupKind group = GroupKind::special_unitary) {
    return HighestWeight(std::vector<std::int64_t>(N, 0), group);
  }

  std::span<const std::int64_t> entries() const noexcept { return entries_; }
  std::size_t rank() const noexcept { return entries_.size(); }
  GroupKind group() const noexcept { return group_; }
  /// 1-based.
  std::int64_t operator[](std::size_t i) const { return entries_.at(i - 1); }
  std::int64_t weight_sum() const noexcept {
    std::int64_t s = 0;
    for (auto e : entries_) s += e;
    return s;
  }
  bool is_zero() const noexcept {
    for (auto e : entries_) if (e != 0) return false;
    return true;
  }
  /// Adds n to every entry; the result is tagged unitary unless n == 0.
  HighestWeight shifted(std::int64_t n) const {
    auto e = entries_;
    for (auto& x : e) x += n;
    return {std::move(e), n == 0 ? group_ : GroupKind::unitary};
  }

  friend bool operator==(const HighestWeight& a, const HighestWeight& b) {
    return a.entries_ == b.entries_;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) os << ',';
      os << entries_[i];
    }
    os << ')';
    return os.str();
  }

 private:
  std::vector<std::int64_t> entries_;
  GroupKind group_;
};

/// lambda = lambda_N(alpha, beta, shift_n).
struct WeightDecomposition {
  Partition alpha;
  Partition beta;
  std::int64_t shift_n = 0;
  std::size_t ambient_N = 1;

  friend bool operator==(const WeightDecomposition&, const WeightDecomposition&) = default;
};

/// Row caps (M1, M2) of the parity-normalized decomposition: N = M1 + M2 + 1
/// with M1 = M2 = M for N = 2M + 1 and (M1, M2) = (M - 1, M) for N = 2M.
inline std::pair<std::size_t, std::size_t> decomposition_caps(std::size_t N) {
  require(N >= 1, ErrorKind::InvalidArgument, "N must be >= 1");
  const std::size_t M = N / 2;
  if (N % 2 == 1) return {M, M};
  return {M - 1, M};
}

// ---------------------------------------------------------------------------
// Dimensions

/// Weyl dimension prod_{i<j} (l_i - l_j + j - i) / (j - i), exactly.
inline BigInt dimension_exact(const HighestWeight& lambda) {
  const auto e = lambda.entries();
  const std::size_t N = e.size();
  BigInt num = 1, den = 1;
  for (std::size_t j = 1; j < N; ++j) {
    // row j: pairs (i, j) for i < j
    BigInt row_num = 1, row_den = 1;
    for (std::size_t i = 0; i < j; ++i) {
      row_num *= BigInt(e[i] - e[j] + static_cast<std::int64_t>(j - i));
      row_den *= BigInt(static_cast<std::int64_t>(j - i));
    }
    num *= row_num;
    den *= row_den;
    const BigInt g = boost::multiprecision::gcd(num, den);
    num /= g;
    den /= g;
  }
  return num / den;
}

/// Same product in the log domain: sum of log1p((l_i - l_j) / (j - i)).
inline LogPositive dimension_log(const HighestWeight& lambda) {
  const auto e = lambda.entries();
  const std::size_t N = e.size();
  CompensatedSum acc;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = i + 1; j < N; ++j) {
      const auto gap = e[i] - e[j];
      if (gap != 0) {
        acc += std::log1p(static_cast<double>(gap) / static_cast<double>(j - i));
      }
    }
  }
  return LogPositive::from_log(acc.value());
}

// ---------------------------------------------------------------------------
// Casimir numbers

namespace detail {

inline BigInt sum_squares(std::span<const std::int64_t> e) {
  BigInt s = 0;
  for (auto x : e) s += BigInt(x) * x;
  return s;
}

/// sum_{i<j} (l_i - l_j) = sum_i l_i (N + 1 - 2i), i 1-based.
inline BigInt sum_pair_gaps(std::span<const std::int64_t> e) {
  const auto N = static_cast<std::int64_t>(e.size());
  BigInt s = 0;
  for (std::int64_t i = 1; i <= N; ++i) s += BigInt(e[i - 1]) * (N + 1 - 2 * i);
  return s;
}

}  // namespace detail

/// (1/N) (sum l_i^2 + sum_{i<j} (l_i - l_j)).
inline Rational casimir_u(const HighestWeight& lambda) {
  const auto e = lambda.entries();
  const auto N = static_cast<std::int64_t>(e.size());
  return Rational(detail::sum_squares(e) + detail::sum_pair_gaps(e), BigInt(N));
}

/// (1/N) (sum l_i^2 - (sum l_i)^2 / N + sum_{i<j} (l_i - l_j)); always >= 0.
inline Rational casimir_su(const HighestWeight& lambda) {
  const auto e = lambda.entries();
  const auto N = static_cast<std::int64_t>(e.size());
  const BigInt total = lambda.weight_sum();
  const BigInt numer =
      (detail::sum_squares(e) + detail::sum_pair_gaps(e)) * N - total * total;
  return Rational(numer, BigInt(N) * N);
}

/// Floating-point c'_2 for the summation kernels.
inline double casimir_su_value(std::span<const std::int64_t> e) {
  const auto N = static_cast<double>(e.size());
  double sq = 0.0, total = 0.0, gaps = 0.0;
  const auto n = static_cast<std::int64_t>(e.size());
  for (std::int64_t i = 1; i <= n; ++i) {
    const auto x = static_cast<double>(e[i - 1]);
    sq += x * x;
    total += x;
    gaps += x * static_cast<double>(n + 1 - 2 * i);
  }
  return (sq - total * total / N + gaps) / N;
}

// ---------------------------------------------------------------------------
// Almost flat weights and the decomposition

/// (a_1 + n, ..., a_r + n, n, ..., n, n - b_s, ..., n - b_1) with N - r - s
/// middle entries; requires N >= r + s + 1.
inline HighestWeight build_weight(const Partition& alpha, const Partition& beta,
                                  std::int64_t n, std::size_t N) {
  const std::size_t r = alpha.length(), s = beta.length();
  if (N < r + s + 1) {
    fail(ErrorKind::AmbientTooSmall,
         "build_weight needs N >= len(alpha) + len(beta) + 1, got N = " +
             std::to_string(N));
  }
  std::vector<std::int64_t> e(N, n);
  for (std::size_t i = 0; i < r; ++i) e[i] = alpha.part(i + 1) + n;
  for (std::size_t j = 1; j <= s; ++j) e[N - j] = n - beta.part(j);
  return {std::move(e), GroupKind::unitary};
}

/// lambda_N(alpha, beta) = lambda_N(alpha, beta, beta_1), with beta_1 = 0 for
/// empty beta; last entry is 0.
inline HighestWeight build_su_weight(const Partition& alpha, const Partition& beta,
                                     std::size_t N) {
  const auto w = build_weight(alpha, beta, beta.part(1), N);
  return {std::vector<std::int64_t>(w.entries().begin(), w.entries().end()),
          GroupKind::special_unitary};
}

/// (lambda - lambda_N, lambda_N).
inline std::pair<HighestWeight, std::int64_t> shift_split(const HighestWeight& lambda) {
  const std::int64_t last = lambda.entries().back();
  std::vector<std::int64_t> e(lambda.entries().begin(), lambda.entries().end());
  for (auto& x : e) x -= last;
  return {HighestWeight(std::move(e), GroupKind::special_unitary), last};
}

/// Parity-normalized decomposition: the pivot entry lambda_{M1+1} separates
/// alpha (first M1 entries) from beta (last M2 entries). Unitary weights are
/// first normalized by shift_split; shift_n then satisfies
/// build_weight(alpha, beta, shift_n, N) == lambda.
inline WeightDecomposition decompose(const HighestWeight& lambda) {
  const auto [su, base] = shift_split(lambda);
  const auto e = su.entries();
  const std::size_t N = e.size();
  const auto [M1, M2] = decomposition_caps(N);
  const std::int64_t pivot = e[M1];
  std::vector<std::int64_t> a, b;
  for (std::size_t i = 0; i < M1; ++i) a.push_back(e[i] - pivot);
  for (std::size_t j = 1; j <= M2; ++j) b.push_back(pivot - e[N - j]);
  WeightDecomposition d{Partition(std::move(a)), Partition(std::move(b)), 0, N};
  d.shift_n = d.beta.part(1) + base;
  return d;
}

/// Casimir numbers straight from (alpha, beta, n) through total contents:
///   unitary:         |a| + |b| + n^2 + (2/N)(K(a) + K(b) + n(|a| - |b|))
///   special unitary: |a| + |b| + (2/N)(K(a) + K(b)) - (|a| - |b|)^2 / N^2
/// Valid for N >= r + s.
inline Rational casimir_via_decomposition(const WeightDecomposition& d,
                                          GroupKind variant) {
  const std::size_t N = d.ambient_N;
  if (N < d.alpha.length() + d.beta.length() || N == 0) {
    fail(ErrorKind::AmbientTooSmall,
         "casimir_via_decomposition needs N >= len(alpha) + len(beta)");
  }
  const BigInt a = d.alpha.size(), b = d.beta.size();
  const BigInt k = BigInt(total_content(d.alpha)) + total_content(d.beta);
  const BigInt n = d.shift_n;
  const BigInt NN = static_cast<std::int64_t>(N);
  if (variant == GroupKind::unitary) {
    return Rational(a + b + n * n) + Rational(2 * (k + n * (a - b)), NN);
  }
  return Rational(a + b) + Rational(2 * k, NN) - Rational((a - b) * (a - b), NN * NN);
}

// ---------------------------------------------------------------------------
// m-coordinates m_i = l_i - l_{i+1} + 1

/// SU(N) weight from its m-coordinates (each >= 1, N - 1 of them).
inline HighestWeight weight_from_m(std::span<const std::int64_t> m) {
  const std::size_t N = m.size() + 1;
  std::vector<std::int64_t> e(N, 0);
  for (std::size_t i = N - 1; i-- > 0;) e[i] = e[i + 1] + (m[i] - 1);
  return {std::move(e), GroupKind::special_unitary};
}

}  // namespace ym2d
