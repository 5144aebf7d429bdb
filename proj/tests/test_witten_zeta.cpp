#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "ym2d/witten_zeta.hpp"

using namespace ym2d;

namespace {

const double kZeta2 = std::numbers::pi * std::numbers::pi / 6.0;

// Independent double sum over (m1, m2) for SU(3), each coordinate <= M, with
// the bound 2 * 2^s zeta(s) M^{1-2s} / (2s - 1) on everything else.
BoundedValue su3_double_sum(double s, int M) {
  long double acc = 0.0L;
  for (int a = 1; a <= M; ++a) {
    for (int b = 1; b <= M; ++b) {
      const long double d = static_cast<long double>(a) * b * (a + b) / 2.0L;
      acc += std::pow(d, -static_cast<long double>(s));
    }
  }
  double zs = 0.0;
  for (int n = 1; n <= 100000; ++n) zs += std::pow(n, -s);
  zs += std::pow(100000.5, 1.0 - s) / (s - 1.0);
  const double tail = 2.0 * std::exp2(s) * zs * std::pow(M, 1.0 - 2.0 * s) / (2.0 * s - 1.0);
  return {static_cast<double>(acc) * (1.0 - 1e-14), (static_cast<double>(acc) + tail) * (1.0 + 1e-14)};
}

std::vector<std::int64_t> entries(const HighestWeight& l) {
  return {l.entries().begin(), l.entries().end()};
}

// All SU(N) weights whose coordinates m_i = l_i - l_{i+1} + 1 have product at
// most cap. The pairs (i, i + 1) alone contribute prod m_i to d.
template <class Fn>
void for_each_with_label_product(std::size_t N, std::int64_t cap, Fn fn) {
  std::vector<std::int64_t> m(N - 1, 1);
  auto rec = [&](auto& self, std::size_t i, std::int64_t prod) -> void {
    if (i == m.size()) {
      fn(weight_from_m(m));
      return;
    }
    for (std::int64_t v = 1; prod * v <= cap; ++v) {
      m[i] = v;
      self(self, i + 1, prod * v);
    }
  };
  rec(rec, 0, 1);
}

}  // namespace

TEST(ZetaSu, TrivialGroup) {
  const auto v = zeta_su({1, 2.0, 10});
  EXPECT_EQ(v.lower, 1.0 * (1.0 - kRoundingSlack));
  EXPECT_LE(v.upper, 1.0 + 1e-12);
  EXPECT_GE(v.upper, 1.0);
}

TEST(ZetaSu, RejectsSAtMostOne) {
  EXPECT_THROW(zeta_su({3, 1.0, 10}), Error);
  EXPECT_THROW(zeta_su({3, 0.9, 10}), Error);
}

TEST(ZetaSu, RiemannAtNTwo) {
  const auto v = zeta_su({2, 2.0, 1000000});
  EXPECT_TRUE(v.contains(kZeta2));
  EXPECT_LT(v.width(), 2e-6);
  const auto v4 = zeta_su({2, 4.0, 10000});
  EXPECT_TRUE(v4.contains(std::pow(std::numbers::pi, 4) / 90.0));
}

TEST(ZetaSu, SuThreeMatchesDoubleSum) {
  const auto v = zeta_su({3, 2.0, 10000000});
  const auto oracle = su3_double_sum(2.0, 2000);
  EXPECT_TRUE(v.intersects(oracle)) << v.lower << " " << v.upper << " vs " << oracle.lower
                                    << " " << oracle.upper;
  EXPECT_LT(v.width(), 1e-6);
  EXPECT_LT(oracle.width(), 1e-6);
}

TEST(ZetaSu, CutTailsCoverSkippedMass) {
  for (std::size_t N : {3u, 4u, 6u}) {
    for (double s : {1.5, 2.0}) {
      const auto coarse = zeta_su({N, s, 200});
      const auto fine = zeta_su({N, s, 200000});
      EXPECT_LE(coarse.lower, fine.lower);
      EXPECT_GE(coarse.upper, fine.upper) << N << " " << s;
      EXPECT_LE(fine.width(), coarse.width());
    }
  }
}

TEST(ZetaSu, BelowProductBound) {
  for (std::size_t N = 1; N <= 20; ++N) {
    for (double s : {1.5, 2.0, 3.0}) {
      const auto v = zeta_su({N, s, 2000});
      EXPECT_LE(v.lower, product_upper_bound(N, s)) << N << " " << s;
    }
  }
}

TEST(ZetaSu, UniformBoundAndLimitChain) {
  const double uniform2 = std::exp(binom_double_tail(2.0));
  const double chain = std::exp(binom_double_tail(1.5));
  for (std::size_t N = 2; N <= 20; ++N) {
    const auto v = zeta_su({N, 2.0, 20000});
    EXPECT_LE(v.upper, uniform2) << N;
    EXPECT_LE(v.upper - 1.0, chain / std::sqrt(static_cast<double>(N))) << N;
  }
}

TEST(ProductUpperBound, Examples) {
  EXPECT_EQ(product_upper_bound(1, 2.0), 1.0);
  const double p2 = product_upper_bound(2, 2.0);
  EXPECT_GE(p2, kZeta2);
  EXPECT_LT(p2 - kZeta2, 1e-6);
  const double p3 = product_upper_bound(3, 2.0);
  const double want = kZeta2 * (8.0 * kZeta2 - 12.0);
  EXPECT_GE(p3, want);
  EXPECT_LT(p3 - want, 1e-5);
}

TEST(BinomDoubleTail, DominatesBruteForce) {
  double brute = 0.0;
  for (int n = 2; n <= 200; ++n) {
    double c = 1.0;
    for (int k = 1; k < n; ++k) {
      c = c * (n - k + 1) / k;
      brute += 1.0 / (c * c);
    }
  }
  const double t2 = binom_double_tail(2.0);
  EXPECT_GE(t2, brute);
  EXPECT_GT(binom_double_tail(1.5), t2);
  EXPECT_LT(binom_double_tail(60.0), 1e-15);
  EXPECT_THROW(binom_double_tail(1.0), Error);
}

TEST(TailBound, DecreasesAndMatchesFormula) {
  double prev = INFINITY;
  for (std::uint64_t D = 10; D <= 10240; D *= 2) {
    const double t = tail_bound({5, 2.0, D});
    EXPECT_LT(t, prev);
    prev = t;
  }
  EXPECT_LE(tail_bound({5, 2.0, 1000000}), 1e-3 * std::exp(binom_double_tail(1.5)) * (1 + 1e-12));
  EXPECT_LE(tail_bound({2, 2.0, 5000}), 1.0 / 5000.0);
  EXPECT_EQ(tail_bound({1, 2.0, 5}), 0.0);
}

TEST(EnumerateByDimension, NTwo) {
  std::vector<std::vector<std::int64_t>> got;
  std::vector<BigInt> dims;
  enumerate_weights_by_dimension(2, 5, [&](const HighestWeight& l, const BigInt& d) {
    got.push_back(entries(l));
    dims.push_back(d);
  });
  const std::vector<std::vector<std::int64_t>> want = {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}};
  EXPECT_EQ(got, want);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(dims[i], i + 1);
}

TEST(EnumerateByDimension, CutoffOneIsTrivialOnly) {
  for (std::size_t N = 1; N <= 7; ++N) {
    int count = 0;
    enumerate_weights_by_dimension(N, 1, [&](const HighestWeight& l, const BigInt& d) {
      EXPECT_TRUE(l.is_zero());
      EXPECT_EQ(d, 1);
      ++count;
    });
    EXPECT_EQ(count, 1);
  }
}

TEST(EnumerateByDimension, NThree) {
  std::set<std::vector<std::int64_t>> got;
  enumerate_weights_by_dimension(3, 3, [&](const HighestWeight& l, const BigInt& d) {
    got.insert(entries(l));
    EXPECT_LE(d, 3);
  });
  const std::set<std::vector<std::int64_t>> want = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}};
  EXPECT_EQ(got, want);
}

TEST(EnumerateByDimension, MatchesBruteForce) {
  for (std::size_t N = 2; N <= 5; ++N) {
    for (std::uint64_t D : {1u, 7u, 50u, 200u}) {
      std::set<std::vector<std::int64_t>> fast, slow;
      enumerate_weights_by_dimension(N, D, [&](const HighestWeight& l, const BigInt& d) {
        EXPECT_TRUE(fast.insert(entries(l)).second);
        EXPECT_EQ(d, dimension_exact(l));
      });
      for_each_with_label_product(N, static_cast<std::int64_t>(D), [&](const HighestWeight& l) {
        if (dimension_exact(l) <= D) slow.insert(entries(l));
      });
      EXPECT_EQ(fast, slow) << "N=" << N << " D=" << D;
    }
  }
}
