#pragma once

// Numeric plumbing shared by every module: exact integers and rationals,
// log-domain positive reals, certified intervals and compensated sums.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "ym2d/error.hpp"

namespace ym2d {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(const BigInt& n) { return n.convert_to<double>(); }

/// Relative widening applied to every floating-point enclosure. Terms are
/// positive and summed with error tracking, so accumulated rounding stays
/// several orders of magnitude below this.
inline constexpr double kRoundingSlack = 1e-13;

/// Positive real stored as its natural logarithm.
class LogPositive {
 public:
  constexpr LogPositive() = default;
  static LogPositive from_log(double log_value) {
    require(std::isfinite(log_value), ErrorKind::InvalidArgument,
            "LogPositive requires a finite logarithm");
    LogPositive out;
    out.log_ = log_value;
    return out;
  }
  static LogPositive from_value(double value) {
    require(value > 0.0 && std::isfinite(value), ErrorKind::InvalidArgument,
            "LogPositive requires a finite positive value");
    return from_log(std::log(value));
  }

  double log_value() const noexcept { return log_; }
  /// May overflow to +inf for huge values; log_value() never does.
  double value() const noexcept { return std::exp(log_); }

  friend LogPositive operator*(LogPositive a, LogPositive b) {
    return from_log(a.log_ + b.log_);
  }
  friend LogPositive operator/(LogPositive a, LogPositive b) {
    return from_log(a.log_ - b.log_);
  }
  LogPositive pow(double exponent) const { return from_log(log_ * exponent); }

 private:
  double log_ = 0.0;
};

/// Neumaier summation; the running compensation keeps the error of a long
/// sum of positive terms at a few ulps of the total.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  CompensatedSum& operator+=(double x) noexcept {
    add(x);
    return *this;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Certified enclosure [lower, upper] of a real number.
struct BoundedValue {
  double lower = 0.0;
  double upper = 0.0;

  BoundedValue() = default;
  BoundedValue(double lo, double hi) : lower(lo), upper(hi) {
    require(std::isfinite(lo) && std::isfinite(hi), ErrorKind::CutoffTooSmall,
            "enclosure bounds must be finite");
    require(lo <= hi, ErrorKind::InvalidArgument,
            "enclosure lower bound exceeds upper bound");
  }
  static BoundedValue exact(double v) { return {v, v}; }
  /// Enclosure of a positive quantity from a partial sum and a bound on the
  /// remainder, widened by the rounding slack.
  static BoundedValue from_partial(double partial, double tail) {
    const double lo = partial * (1.0 - kRoundingSlack);
    const double hi = (partial + tail) * (1.0 + kRoundingSlack);
    return {lo, hi};
  }

  double width() const noexcept { return upper - lower; }
  double midpoint() const noexcept { return 0.5 * (lower + upper); }
  bool contains(double x) const noexcept { return lower <= x && x <= upper; }
  bool contains(const BoundedValue& o) const noexcept {
    return lower <= o.lower && o.upper <= upper;
  }
  bool intersects(const BoundedValue& o) const noexcept {
    return lower <= o.upper && o.lower <= upper;
  }

  friend BoundedValue operator+(const BoundedValue& a, const BoundedValue& b) {
    return {a.lower + b.lower, a.upper + b.upper};
  }
  /// Product of enclosures of non-negative quantities.
  friend BoundedValue operator*(const BoundedValue& a, const BoundedValue& b) {
    require(a.lower >= 0.0 && b.lower >= 0.0, ErrorKind::InvalidArgument,
            "enclosure product requires non-negative operands");
    return {a.lower * b.lower, a.upper * b.upper};
  }
};

/// Largest possible |x - y| for x in a, y in b.
inline double max_distance(const BoundedValue& a, const BoundedValue& b) {
  return std::max(std::fabs(a.upper - b.lower), std::fabs(b.upper - a.lower));
}

/// Smallest possible |x - y| for x in a, y in b (0 when they overlap).
inline double min_distance(const BoundedValue& a, const BoundedValue& b) {
  if (a.intersects(b)) return 0.0;
  return a.upper < b.lower ? b.lower - a.upper : a.lower - b.upper;
}

/// x^{-s} for x > 0, with exact fast paths for small integer exponents.
inline double inv_pow(double x, double s) {
  if (s == 2.0) return 1.0 / (x * x);
  if (s == 1.0) return 1.0 / x;
  if (s == 3.0) return 1.0 / (x * x * x);
  if (s == 4.0) {
    const double x2 = x * x;
    return 1.0 / (x2 * x2);
  }
  return std::exp(-s * std::log(x));
}

/// Upper bound for sum_{n > K} n^{-a}, a > 1, from convexity:
/// f(n) <= integral of f over [n - 1/2, n + 1/2].
inline double power_tail_upper(double K, double a) {
  return std::exp((1.0 - a) * std::log(K + 0.5)) / (a - 1.0);
}

/// Lower bound for sum_{n > K} n^{-a}, a > 1, from the trapezoid rule
/// overestimating the integral of a convex function.
inline double power_tail_lower(double K, double a) {
  const double k1 = K + 1.0;
  return std::exp((1.0 - a) * std::log(k1)) / (a - 1.0) + 0.5 * inv_pow(k1, a);
}

}  // namespace ym2d
