#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "ym2d/highest_weight.hpp"

using namespace ym2d;

namespace {

HighestWeight su(std::vector<std::int64_t> e) {
  return {std::move(e), GroupKind::special_unitary};
}
HighestWeight u(std::vector<std::int64_t> e) { return {std::move(e), GroupKind::unitary}; }

BigInt binomial(int n, int k) {
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Random partition of size at most `budget` with at most `max_len` rows.
Partition random_partition(std::mt19937_64& rng, std::int64_t budget, std::size_t max_len) {
  std::vector<std::int64_t> parts;
  std::int64_t cap = budget;
  while (parts.size() < max_len && budget > 0) {
    const std::int64_t hi = std::min(cap, budget);
    const auto v = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi + 1));
    if (v == 0) break;
    parts.push_back(v);
    budget -= v;
    cap = v;
  }
  return Partition(std::move(parts));
}

template <class Fn>
void for_each_su_weight(std::size_t N, std::int64_t max_total, Fn fn) {
  std::vector<std::int64_t> e(N, 0);
  auto rec = [&](auto& self, std::size_t i, std::int64_t used) -> void {
    if (i + 1 >= N) {
      fn(su(e));
      return;
    }
    const std::int64_t cap = i == 0 ? max_total : e[i - 1];
    for (std::int64_t v = 0; v <= cap; ++v) {
      if (used + v * static_cast<std::int64_t>(N - 1 - i) > max_total) break;
      e[i] = v;
      self(self, i + 1, used + v);
    }
    e[i] = 0;
  };
  rec(rec, 0, 0);
}

}  // namespace

TEST(HighestWeight, Validation) {
  EXPECT_THROW(su({1, 2, 0}), Error);
  EXPECT_THROW(su({1, 1}), Error);
  EXPECT_NO_THROW(u({3, 2, -1}));
}

TEST(DimensionExact, Examples) {
  EXPECT_EQ(dimension_exact(su({0, 0, 0})), 1);
  EXPECT_EQ(dimension_exact(su({2, 0})), 3);
  for (int N = 2; N <= 12; ++N) {
    for (int k = 0; k <= N; ++k) {
      std::vector<std::int64_t> e(N, 0);
      for (int i = 0; i < k; ++i) e[i] = 1;
      EXPECT_EQ(dimension_exact(u(e)), binomial(N, k));
    }
  }
}

TEST(DimensionLog, Examples) {
  EXPECT_DOUBLE_EQ(dimension_log(su({0, 0, 0})).log_value(), 0.0);
  EXPECT_NEAR(dimension_log(su({1, 0})).log_value(), std::log(2.0), 1e-15);
  EXPECT_NEAR(dimension_log(su({1, 1, 0, 0})).log_value(), std::log(6.0), 1e-15);
}

TEST(DimensionLog, MatchesExactOnRandomWeights) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t N = 2 + rng() % 49;
    std::vector<std::int64_t> e(N, 0);
    std::int64_t budget = static_cast<std::int64_t>(rng() % 61);
    for (std::size_t i = N - 1; i-- > 0;) {
      const auto step = static_cast<std::int64_t>(rng() % 3);
      e[i] = e[i + 1] + step;
    }
    // scale into the |lambda| <= 60 range
    while (std::accumulate(e.begin(), e.end(), std::int64_t{0}) > budget) {
      for (auto& x : e) x = x / 2;
    }
    const HighestWeight l = su(e);
    const double exact_log = std::log(to_double(dimension_exact(l)));
    // exp(log) vs exact, relative
    EXPECT_NEAR(dimension_log(l).log_value(), exact_log, 1e-12) << l.to_string();
  }
}

TEST(Casimir, Examples) {
  for (std::int64_t n : {0, 1, 3, -2}) {
    EXPECT_EQ(casimir_u(u({n, n, n, n})), Rational(n * n));
  }
  for (int N = 1; N <= 8; ++N) {
    std::vector<std::int64_t> e(N, 0);
    e[0] = 2;
    EXPECT_EQ(casimir_u(u(e)), Rational(4 + 2 * (N - 1), N));
  }
  EXPECT_EQ(casimir_su(su({0, 0, 0})), 0);
  EXPECT_EQ(casimir_su(su({1, 0})), Rational(3, 4));
  // (2 - 4/3 + 2) / 3; same as the dual (1,0,0)
  EXPECT_EQ(casimir_su(su({1, 1, 0})), Rational(8, 9));
  EXPECT_EQ(casimir_su(su({1, 0, 0})), Rational(8, 9));
  EXPECT_DOUBLE_EQ(casimir_su_value(std::vector<std::int64_t>{1, 1, 0}), 8.0 / 9.0);
}

TEST(BuildWeight, Examples) {
  EXPECT_EQ(build_weight(Partition({2, 1, 1}), Partition({2, 1, 1}), 2, 7),
            u({4, 3, 3, 2, 1, 1, 0}));
  EXPECT_EQ(build_weight(Partition(), Partition(), 5, 3), u({5, 5, 5}));
  EXPECT_EQ(build_weight(Partition({3, 2, 2, 1}), Partition({1}), 1, 7),
            u({4, 3, 3, 2, 1, 1, 0}));
  try {
    build_weight(Partition({1, 1}), Partition({1}), 0, 3);
    FAIL() << "expected AmbientTooSmall";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AmbientTooSmall);
  }
}

TEST(BuildSuWeight, Examples) {
  EXPECT_EQ(build_su_weight(Partition({1}), Partition(), 4), su({1, 0, 0, 0}));
  EXPECT_EQ(build_su_weight(Partition({2, 1, 1}), Partition({2, 1, 1}), 7),
            su({4, 3, 3, 2, 1, 1, 0}));
  EXPECT_EQ(build_su_weight(Partition(), Partition({1}), 3), su({1, 1, 0}));
  EXPECT_EQ(build_su_weight(Partition(), Partition({1}), 3).group(),
            GroupKind::special_unitary);
}

TEST(Decompose, Examples) {
  const auto z = decompose(su({0, 0, 0, 0, 0}));
  EXPECT_TRUE(z.alpha.empty());
  EXPECT_TRUE(z.beta.empty());
  const auto d = decompose(su({4, 3, 3, 2, 1, 1, 0}));
  EXPECT_EQ(d.alpha, Partition({2, 1, 1}));
  EXPECT_EQ(d.beta, Partition({2, 1, 1}));
  const auto e = decompose(su({1, 1, 0, 0}));
  EXPECT_LE(e.alpha.length(), 1u);
  EXPECT_LE(e.beta.length(), 2u);
  EXPECT_EQ(build_su_weight(e.alpha, e.beta, 4), su({1, 1, 0, 0}));
}

TEST(Decompose, BijectionOnSmallWeights) {
  for (std::size_t N = 1; N <= 8; ++N) {
    const auto [M1, M2] = decomposition_caps(N);
    for_each_su_weight(N, 8, [&](const HighestWeight& l) {
      const auto d = decompose(l);
      ASSERT_LE(d.alpha.length(), M1);
      ASSERT_LE(d.beta.length(), M2);
      ASSERT_EQ(build_su_weight(d.alpha, d.beta, N), l) << l.to_string();
      ASSERT_EQ(build_weight(d.alpha, d.beta, d.shift_n, N), l) << l.to_string();
    });
  }
}

TEST(ShiftSplit, Examples) {
  auto [a, n1] = shift_split(u({5, 5, 5}));
  EXPECT_EQ(a, su({0, 0, 0}));
  EXPECT_EQ(n1, 5);
  auto [b, n2] = shift_split(u({4, 3, 0}));
  EXPECT_EQ(b, su({4, 3, 0}));
  EXPECT_EQ(n2, 0);
  auto [c, n3] = shift_split(u({3, 2, -1}));
  EXPECT_EQ(c, su({4, 3, 0}));
  EXPECT_EQ(n3, -1);
  EXPECT_EQ(c.shifted(n3), u({3, 2, -1}));
}

TEST(CasimirViaDecomposition, Examples) {
  EXPECT_EQ(casimir_via_decomposition({Partition({2}), Partition(), 0, 10}, GroupKind::unitary),
            Rational(11, 5));
  EXPECT_EQ(casimir_via_decomposition({Partition(), Partition(), 3, 6}, GroupKind::unitary), 9);
  EXPECT_EQ(casimir_via_decomposition({Partition({1}), Partition({1}), 1, 4},
                                      GroupKind::special_unitary),
            2);
  EXPECT_EQ(casimir_su(su({2, 1, 1, 0})), 2);
  // the |a| != |b| correction enters with a minus sign
  const WeightDecomposition t{Partition({3}), Partition(), 0, 2};
  EXPECT_EQ(casimir_via_decomposition(t, GroupKind::special_unitary),
            casimir_su(build_su_weight(Partition({3}), Partition(), 2)));
}

TEST(CasimirViaDecomposition, RandomizedExactIdentities) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::int64_t budget = static_cast<std::int64_t>(rng() % 31);
    const std::int64_t ba = static_cast<std::int64_t>(rng() % (budget + 1));
    const Partition a = random_partition(rng, ba, 19);
    const Partition b = random_partition(rng, budget - ba, 19);
    const std::size_t lo = a.length() + b.length() + 1;
    if (lo > 40) continue;
    const std::size_t N = lo + rng() % (41 - lo);
    const std::int64_t n = static_cast<std::int64_t>(rng() % 11) - 5;
    const auto w = build_weight(a, b, n, N);
    const WeightDecomposition d{a, b, n, N};
    ASSERT_EQ(casimir_via_decomposition(d, GroupKind::unitary), casimir_u(w));
    const auto s = build_su_weight(a, b, N);
    ASSERT_EQ(casimir_via_decomposition(d, GroupKind::special_unitary), casimir_su(s));
    // c2(l + n) = c2'(l) + (n + |l|/N)^2
    const Rational shift = Rational(n) + Rational(s.weight_sum(), static_cast<std::int64_t>(N));
    ASSERT_EQ(casimir_u(s.shifted(n)), casimir_su(s) + shift * shift);
    // round trip through the parity-normalized decomposition
    const auto dd = decompose(w);
    ASSERT_EQ(build_weight(dd.alpha, dd.beta, dd.shift_n, N), w);
    if (N % 2 == 1 && a.length() <= N / 2 && b.length() <= N / 2) {
      ASSERT_EQ(dd.alpha, a);
      ASSERT_EQ(dd.beta, b);
      ASSERT_EQ(dd.shift_n, n);
    }
  }
}

TEST(CasimirBounds, AlmostFlatInequalities) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t N = 2 + rng() % 30;
    std::vector<std::int64_t> e(N, 0);
    for (std::size_t i = N - 1; i-- > 0;) e[i] = e[i + 1] + static_cast<std::int64_t>(rng() % 3 == 0);
    const auto l = su(e);
    const auto d = decompose(l);
    const Rational k = d.alpha.size() + d.beta.size();
    const Rational NN = static_cast<std::int64_t>(N);
    const Rational c = casimir_su(l);
    ASSERT_GE(c, 0);
    ASSERT_LE(k - k * k / NN, c);
    ASSERT_LE(c, k + k * k / NN + k * k / (NN * NN));
    ASSERT_LE(k / 2, c);
  }
}

TEST(Dimension, NonTrivialAtLeastN) {
  for (std::size_t N = 2; N <= 8; ++N) {
    for_each_su_weight(N, 6, [&](const HighestWeight& l) {
      if (!l.is_zero()) {
        ASSERT_GE(dimension_exact(l), static_cast<long>(N)) << l.to_string();
      }
    });
  }
}

TEST(WeightFromM, RoundTrip) {
  const std::vector<std::int64_t> m = {2, 1, 3};
  EXPECT_EQ(weight_from_m(m), su({3, 2, 2, 0}));
}
