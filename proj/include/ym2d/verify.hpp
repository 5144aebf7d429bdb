#pragma once

// Property suites behind `ym2d verify`. Each check records how many cases it
// ran and the first counterexample. Randomized cases draw from mt19937_64
// with plain modular reduction, so a seed fixes the report on every platform.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "ym2d/frobenius.hpp"
#include "ym2d/highest_weight.hpp"
#include "ym2d/oracles.hpp"
#include "ym2d/partition.hpp"
#include "ym2d/partition_functions.hpp"
#include "ym2d/witten_zeta.hpp"

namespace ym2d {

struct CheckResult {
  explicit CheckResult(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  bool pass = true;
  std::size_t cases = 0;
  std::string counterexample;

  void record(bool ok, const std::string& what) {
    ++cases;
    if (!ok && pass) {
      pass = false;
      counterexample = what;
    }
  }
  template <class Fn>
    requires std::invocable<Fn&>
  void record(bool ok, Fn&& describe) {
    ++cases;
    if (!ok && pass) {
      pass = false;
      counterexample = describe();
    }
  }
};

struct SuiteResult {
  std::string name;
  std::vector<CheckResult> checks;

  bool pass() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<SuiteResult> suites;
  /// Filled by the fs suite.
  std::optional<UnitaryFsDiagnostic> unitary_fs;

  bool pass() const {
    for (const auto& s : suites) {
      if (!s.pass()) return false;
    }
    return true;
  }
};

inline const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"weights", "fs", "sandwich", "tails"};
  return names;
}

namespace detail {

inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

/// Random partition of size with at most max_len rows.
inline Partition random_partition(std::mt19937_64& rng, std::int64_t size, std::size_t max_len) {
  std::vector<std::int64_t> parts;
  std::int64_t left = size;
  while (left > 0) {
    const std::int64_t p = parts.size() + 1 == max_len
                               ? left
                               : 1 + static_cast<std::int64_t>(draw(rng, static_cast<std::uint64_t>(left)));
    parts.push_back(p);
    left -= p;
  }
  std::sort(parts.rbegin(), parts.rend());
  return Partition(std::move(parts));
}

/// sum over boxes (i, j) of j - i, walking the diagram.
inline std::int64_t content_by_boxes(const Partition& a) {
  std::int64_t k = 0;
  for (std::size_t i = 1; i <= a.length(); ++i) {
    for (std::int64_t j = 1; j <= a.part(i); ++j) k += j - static_cast<std::int64_t>(i);
  }
  return k;
}

inline std::string describe(const Partition& a, const Partition& b, std::int64_t n,
                            std::size_t N) {
  std::ostringstream os;
  os << "alpha=" << a.to_string() << " beta=" << b.to_string() << " n=" << n << " N=" << N;
  return os.str();
}

}  // namespace detail

/// Exact identities on random (alpha, beta, n, N) with N <= 40 and
/// |alpha| + |beta| <= 30: Casimir numbers through contents against the
/// defining sums, the shift identity c_2(l + n) = c'_2(l) + (n + |l|/N)^2,
/// the content closed form against a box walk, and the decomposition round
/// trip.
inline std::vector<CheckResult> check_weight_identities(std::uint64_t seed, std::size_t cases) {
  std::mt19937_64 rng(seed);
  CheckResult cas{"casimir_via_decomposition"}, shift{"shift_identity"},
      content{"content_closed_form"}, round{"decompose_round_trip"};
  for (std::size_t t = 0; t < cases; ++t) {
    const std::size_t N = 1 + detail::draw(rng, 40);
    const std::size_t rows = N - 1;  // r + s <= N - 1
    const std::size_t r_cap = rows == 0 ? 0 : detail::draw(rng, rows + 1);
    const std::size_t s_cap = rows - r_cap;
    const std::int64_t total = static_cast<std::int64_t>(detail::draw(rng, 31));
    std::int64_t a_size = r_cap == 0 ? 0 : static_cast<std::int64_t>(detail::draw(rng, total + 1));
    std::int64_t b_size = s_cap == 0 ? 0 : total - a_size;
    const Partition alpha = detail::random_partition(rng, a_size, r_cap);
    const Partition beta = detail::random_partition(rng, b_size, s_cap);
    const std::int64_t n = static_cast<std::int64_t>(detail::draw(rng, 41)) - 20;
    const auto what = [&] { return detail::describe(alpha, beta, n, N); };

    const HighestWeight lam = build_weight(alpha, beta, n, N);
    const WeightDecomposition d{alpha, beta, n, N};
    const HighestWeight su = build_su_weight(alpha, beta, N);
    cas.record(casimir_via_decomposition(d, GroupKind::unitary) == casimir_u(lam) &&
                   casimir_via_decomposition(d, GroupKind::special_unitary) == casimir_su(lam) &&
                   casimir_u(lam) == casimir_bruteforce(lam, GroupKind::unitary) &&
                   casimir_su(lam) == casimir_bruteforce(lam, GroupKind::special_unitary),
               what);

    const Rational x = Rational(n) + Rational(su.weight_sum(), static_cast<std::int64_t>(N));
    shift.record(casimir_u(su.shifted(n)) == casimir_su(su) + x * x, what);

    content.record(total_content(alpha) == detail::content_by_boxes(alpha) &&
                       total_content(beta) == detail::content_by_boxes(beta),
                   what);

    const WeightDecomposition back = decompose(lam);
    round.record(build_weight(back.alpha, back.beta, back.shift_n, N) == lam, what);
  }
  return {cas, shift, content, round};
}

/// Quadrature against the classification for SU(2), SU(3) weights with
/// |l| <= max_sum.
inline CheckResult check_fs_small_ranks(std::int64_t max_sum = 6) {
  CheckResult c{"fs_quadrature_su2_su3"};
  for (std::size_t N : {2, 3}) {
    std::vector<std::int64_t> e(N, 0);
    auto rec = [&](auto& self, std::size_t i, std::int64_t cap, std::int64_t used) -> void {
      if (i == N - 1) {
        const HighestWeight l(e, GroupKind::special_unitary);
        const int quad = fs_quadrature(l);
        c.record(quad == fs_indicator(l), [&] {
          return l.to_string() + " quadrature=" + std::to_string(quad) +
                 " rule=" + std::to_string(fs_indicator(l));
        });
        return;
      }
      for (std::int64_t v = 0; v <= cap && used + v <= max_sum; ++v) {
        e[i] = v;
        self(self, i + 1, v, used + v);
      }
      e[i] = 0;
    };
    rec(rec, 0, max_sum, 0);
  }
  return c;
}

/// Exact check of the genus-three dimension bound for M <= M_max,
/// |beta| <= max_size.
inline CheckResult check_genus3_bound(std::size_t M_max = 5, std::int64_t max_size = 8) {
  CheckResult c{"genus3_dimension_bound"};
  for (std::size_t M = 1; M <= M_max; ++M) {
    for (const auto& beta : enumerate_partitions(max_size, M)) {
      c.record(genus3_dimension_bound_check(beta, M),
               [&] { return "M=" + std::to_string(M) + " beta=" + beta.to_string(); });
    }
  }
  return c;
}

/// The torus and Klein bottle enclosures at k_small contain those at k_large.
inline CheckResult check_k_nesting(std::span<const std::size_t> Ns, double q,
                                   std::int64_t k_small, std::int64_t k_large) {
  CheckResult c{"k_max_nesting"};
  for (std::size_t N : Ns) {
    for (bool orientable : {true, false}) {
      const SurfaceSpec s{orientable, orientable ? 1 : 2, area_from_q(q),
                          GroupKind::special_unitary, N};
      const auto a = z_value(s, {k_small});
      const auto b = z_value(s, {k_large});
      c.record(a.contains(b), [&] {
        std::ostringstream os;
        os.precision(17);
        os << "N=" << N << (orientable ? " torus" : " klein") << " small=[" << a.lower << ","
           << a.upper << "] large=[" << b.lower << "," << b.upper << "]";
        return os.str();
      });
    }
  }
  return c;
}

inline VerifyReport run_verify(std::span<const std::string> suites, std::uint64_t seed,
                               std::size_t random_cases = 10000) {
  VerifyReport r;
  r.seed = seed;
  for (const auto& name : suites) {
    SuiteResult s{name, {}};
    if (name == "weights") {
      s.checks = check_weight_identities(seed, random_cases);
    } else if (name == "fs") {
      s.checks.push_back(check_fs_small_ranks());
      CheckResult contrib{"contributing_matches_classify"};
      for (std::size_t N = 2; N <= 8; ++N) {
        const auto [M1, M2] = decomposition_caps(N);
        for (const auto& a : enumerate_partitions(6, M1)) {
          for (const auto& b : enumerate_partitions(6, M2)) {
            const auto l = build_su_weight(a, b, N);
            contrib.record(is_contributing(decompose(l)) == (classify(l) != RepClass::complex),
                           [&] { return l.to_string(); });
          }
        }
      }
      s.checks.push_back(contrib);
      r.unitary_fs = unitary_fs_diagnostic(3, 2);
    } else if (name == "sandwich") {
      CheckResult bounds{"one_le_z_le_z2_at_zero"};
      for (std::size_t N = 2; N <= 6; ++N) {
        const auto top = z_value({true, 2, 0.0, GroupKind::special_unitary, N}, {});
        for (int g : {2, 3, 4}) {
          for (double T : {0.0, 0.5, 2.0}) {
            const auto v = z_value({true, g, T, GroupKind::special_unitary, N}, {});
            bounds.record(v.upper >= 1.0 && v.lower <= top.upper, [&] {
              return "N=" + std::to_string(N) + " g=" + std::to_string(g) +
                     " T=" + std::to_string(T);
            });
          }
        }
      }
      s.checks.push_back(bounds);
      CheckResult chain{"zeta_limit_chain"};
      const double envelope = std::exp(binom_double_tail(1.5));
      for (std::size_t N = 2; N <= 20; ++N) {
        const auto z = zeta_su({N, 2.0, 100000});
        chain.record(z.upper - 1.0 <= envelope / std::sqrt(static_cast<double>(N)),
                     [&] { return "N=" + std::to_string(N); });
      }
      s.checks.push_back(chain);
      s.checks.push_back(check_genus3_bound());
      CheckResult sand{"s1_sandwich"};
      const auto d = s_decomposition({true, 1, area_from_q(0.5), GroupKind::special_unitary, 30},
                                     {60, 0, 0.4});
      sand.record(d.sandwich_holds(), "N=30 gamma=0.4 q=0.5");
      s.checks.push_back(sand);
    } else if (name == "tails") {
      const std::vector<std::size_t> Ns{4, 6};
      s.checks.push_back(check_k_nesting(Ns, 0.5, 20, 60));
      CheckResult jtp{"jacobi_triple_product"};
      for (double q : {0.1, 0.5}) {
        jtp.record(jacobi_triple_product_check(q) <= 1e-9, "q=" + std::to_string(q));
      }
      jtp.record(jacobi_triple_product_check(0.9) <= 1e-6, "q=0.9");
      s.checks.push_back(jtp);
      CheckResult n_nest{"n_max_nesting"};
      const SurfaceSpec u{true, 1, 1.0, GroupKind::unitary, 4};
      const auto a = z_value(u, {40, 2}), b = z_value(u, {40, 0});
      n_nest.record(a.contains(b), "N=4 T=1 n_max 2 vs auto");
      s.checks.push_back(n_nest);
    } else {
      fail(ErrorKind::InvalidArgument, "unknown suite: " + name);
    }
    r.suites.push_back(std::move(s));
  }
  return r;
}

}  // namespace ym2d
