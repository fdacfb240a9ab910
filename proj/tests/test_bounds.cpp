#include <doctest.h>

#include <random>

#include "codebounds/bounds.hpp"
#include "codebounds/errors.hpp"
#include "codebounds/search.hpp"
#include "oracles.hpp"

using namespace codebounds;

TEST_CASE("plotkin bound") {
  CHECK(plotkin_bound(CodeParams(5, 7, 6)) == 15LL);
  CHECK(plotkin_bound(CodeParams(3, 15, 11)) == 11LL);
  CHECK(plotkin_bound(CodeParams(4, 7, 6)) == 8LL);
  CHECK_FALSE(plotkin_bound(CodeParams(5, 8, 6)).has_value());  // qd = 30 < (q-1)n = 32
  CHECK_FALSE(plotkin_bound(CodeParams(4, 8, 6)).has_value());  // qd = (q-1)n
  CHECK(plotkin_bound(CodeParams(2, 3, 3)) == 2LL);
}

TEST_CASE("column recursion") {
  CHECK(column_recursion_bound(5, 15) == 75);
  CHECK(column_recursion_bound(4, 60) == 240);
}

TEST_CASE("pair counting matches the minimum over compositions") {
  for (int q = 2; q <= 5; ++q) {
    for (int n = 1; n <= 6; ++n) {
      for (int d = 1; d <= n; ++d) {
        for (long long M = 1; M <= 24; ++M) {
          const auto pc = pair_count_bounds(CodeParams(q, n, d), M);
          CHECK(pc.L == M * (M - 1) / 2 * (n - d));
          CHECK(pc.R == n * oracle::min_pair_sum(q, M));
          CHECK(pc.budget == pc.L - pc.R);
        }
      }
    }
  }
  CHECK_THROWS_AS(pair_count_bounds(CodeParams(2, 3, 2), 0), PreconditionError);
}

TEST_CASE("equidistance forced at the sizes used by the bounds") {
  const auto a = pair_count_bounds(CodeParams(3, 15, 11), 10);
  CHECK(a.L == 180);
  CHECK(a.R == 180);
  CHECK(equidistance_forced(CodeParams(3, 15, 11), 10));
  CHECK(equidistance_forced(CodeParams(5, 7, 6), 15));
  CHECK(equidistance_forced(CodeParams(5, 7, 6), 14));
  CHECK_FALSE(equidistance_forced(CodeParams(5, 7, 6), 13));
}

TEST_CASE("h table for (7,6)_5") {
  // Independent: L - R with R from the composition minimum.
  for (long long k = 2; k <= 15; ++k) {
    const long long L = k * (k - 1) / 2 * 1;
    const long long R = 7 * oracle::min_pair_sum(5, k);
    CHECK(h_table(CodeParams(5, 7, 6), k) == std::max(0LL, L - R));
  }
  const std::vector<long long> published = {0, 0, 1, 3, 6, 10, 8, 7, 7, 8, 10};  // k = 15 down to 5
  for (int i = 0; i < 11; ++i) CHECK(h_table(CodeParams(5, 7, 6), 15 - i) == published[i]);
}

TEST_CASE("irregular pair audits on random valid codes") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> qd(2, 5), nd(2, 8);
  int violations = 0;
  for (int t = 0; t < 1000; ++t) {
    const int q = qd(rng), n = nd(rng);
    std::uniform_int_distribution<int> dd(1, n);
    const int d = dd(rng);
    const Code c = oracle::random_code(rng, q, n, d, 40);
    if (c.size() < 2) continue;
    const CodeParams p(q, n, d);
    const auto pc = pair_count_bounds(p, static_cast<long long>(c.size()));
    long long agree = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) agree += agreement(c[i], c[j]);
    }
    violations += agree < pc.R || agree > pc.L;
    const auto audit = irregular_budget_audit(c, d);
    violations += audit.not_d_pairs > audit.budget;
    violations += audit.irregular > audit.not_d_pairs;
  }
  CHECK(violations == 0);
}

TEST_CASE("phi") {
  CHECK(phi_eval(5, 8, 6, 3, 1) == -290);
  CHECK(phi_eval(5, 8, 6, 3, 4) == -98);
  CHECK(phi_eval(4, 11, 8, 4, 3) == -16);
}

TEST_CASE("divisibility bound") {
  const auto a = divisibility_bound(CodeParams(5, 8, 6));
  REQUIRE(a.has_value());
  CHECK(a->m == 3);
  CHECK(a->chosen_r == 4);
  CHECK(a->phi.at(4) == -98);
  CHECK(a->bound == 70);
  CHECK(a->phi.at(4) == 2 * (a->upper_pairs - a->lower_pairs));

  const auto b = divisibility_bound(CodeParams(4, 11, 8));
  REQUIRE(b.has_value());
  CHECK(b->m == 4);
  CHECK(b->chosen_r == 3);
  CHECK(b->phi.at(3) == -16);
  CHECK(b->bound == 60);

  CHECK_FALSE(divisibility_bound(CodeParams(3, 6, 4)).has_value());  // n - d divides m(n-1)
  CHECK_FALSE(divisibility_bound(CodeParams(2, 5, 2)).has_value());  // m not a positive integer
}

TEST_CASE("closed form for d = q + 1, n = q + 3") {
  CHECK(corollary_q_plus_3(5) == 70LL);
  CHECK(corollary_q_plus_3(9) == 396LL);
  CHECK(corollary_q_plus_3(13).has_value());
  CHECK_FALSE(corollary_q_plus_3(7).has_value());
  CHECK_FALSE(corollary_q_plus_3(1).has_value());
}

TEST_CASE("known values registry") {
  CHECK(registry_lookup(3, 15, 11)->value == 10);
  CHECK(registry_lookup(4, 8, 6)->value == 32);
  CHECK_FALSE(registry_lookup(2, 9, 4).has_value());
  CHECK(KnownValuesRegistry::builtin().entries().size() >= 4);
  for (const auto& [k, e] : KnownValuesRegistry::builtin().entries()) CHECK_FALSE(e.provenance.empty());
}

TEST_CASE("best bound") {
  CHECK(best_bound(CodeParams(5, 7, 6)).value == 15);
  CHECK(best_bound(CodeParams(5, 8, 6)).value == 70);
  CHECK(best_bound(CodeParams(4, 11, 8)).value == 60);
  CHECK(best_bound(CodeParams(3, 16, 11)).value == 30);
  CHECK(best_bound(CodeParams(2, 3, 3)).value == 2);
}

TEST_CASE("small exact values are consistent with the bounds") {
  // Brute-force maximum code sizes for tiny parameters never exceed best_bound.
  struct P {
    int q, n, d;
  };
  for (const P p : {P{2, 4, 2}, P{2, 5, 3}, P{3, 3, 2}, P{3, 4, 3}, P{2, 6, 4}}) {
    int best = 1;
    for (int m = 2; m <= 16; ++m) {
      bool any = false;
      oracle::for_each_code(p.q, p.n, p.d, m, [&](const auto&) { any = true; });
      if (!any) break;
      best = m;
    }
    CHECK(best <= best_bound(CodeParams(p.q, p.n, p.d)).value);
  }
}
