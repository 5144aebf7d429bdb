#pragma once

// Real / complex / quaternionic type of U(N) and SU(N) irreducibles, read off
// the consecutive differences of the highest weight.

#include <cstdint>
#include <span>
#include <vector>

#include "ym2d/highest_weight.hpp"
#include "ym2d/partition.hpp"

namespace ym2d {

enum class RepClass { real, complex, quaternionic };

constexpr const char* to_string(RepClass c) noexcept {
  switch (c) {
    case RepClass::real: return "real";
    case RepClass::complex: return "complex";
    case RepClass::quaternionic: return "quaternionic";
  }
  return "?";
}

constexpr int indicator(RepClass c) noexcept {
  switch (c) {
    case RepClass::real: return 1;
    case RepClass::complex: return 0;
    case RepClass::quaternionic: return -1;
  }
  return 0;
}

/// Classification from the labels m_i = l_i - l_{i+1}, i = 1..N-1. Complex
/// unless (m_i) is a palindrome; a self-dual weight is quaternionic exactly
/// when N = 2 mod 4 and the middle label m_{N/2} is odd (the center element
/// -1 then acts by -1 on the invariant pairing).
inline RepClass classify_labels(std::span<const std::int64_t> m) {
  const std::size_t L = m.size();
  for (std::size_t i = 0; i < L / 2; ++i) {
    if (m[i] != m[L - 1 - i]) return RepClass::complex;
  }
  const std::size_t N = L + 1;
  if (N % 4 == 2 && m[N / 2 - 1] % 2 != 0) return RepClass::quaternionic;
  return RepClass::real;
}

inline RepClass classify(const HighestWeight& lambda) {
  const auto e = lambda.entries();
  std::vector<std::int64_t> m;
  m.reserve(e.size());
  for (std::size_t i = 1; i < e.size(); ++i) m.push_back(e[i - 1] - e[i]);
  return classify_labels(m);
}

inline int fs_indicator(const HighestWeight& lambda) {
  return indicator(classify(lambda));
}

/// (b_1 - b_M, ..., b_{M-1} - b_M), trailing zeros stripped; b_M = 0 when
/// beta is shorter than M.
inline Partition beta_reduction(const Partition& beta, std::size_t M) {
  require(M >= 1, ErrorKind::InvalidArgument, "beta_reduction needs M >= 1");
  require(beta.length() <= M, ErrorKind::InvalidArgument,
          "beta_reduction needs len(beta) <= M");
  const std::int64_t last = beta.part(M);
  std::vector<std::int64_t> out;
  for (std::size_t i = 1; i < M; ++i) out.push_back(beta.part(i) - last);
  return Partition(std::move(out));
}

/// Self-duality test on a parity-normalized decomposition: alpha = beta for
/// odd N, alpha = beta_reduction(beta, N/2) for even N.
inline bool is_contributing(const WeightDecomposition& d) {
  const std::size_t N = d.ambient_N;
  if (N % 2 == 1) return d.alpha == d.beta;
  return d.alpha == beta_reduction(d.beta, N / 2);
}

}  // namespace ym2d
