#include <doctest.h>

#include <random>

#include "codebounds/bounds.hpp"
#include "codebounds/canonical.hpp"
#include "codebounds/search.hpp"
#include "oracles.hpp"

using namespace codebounds;

namespace {

std::set<std::vector<std::vector<int>>> as_rows(const std::vector<Code>& cs) {
  std::set<std::vector<std::vector<int>>> out;
  for (const Code& c : cs) out.insert(oracle::rows_of(c));
  return out;
}

EnumerationTask task_for(int q, int n, int d, int m, int threads = 0) {
  EnumerationTask t{CodeParams(q, n, d), m};
  t.threads = threads;
  return t;
}

}  // namespace

TEST_CASE("enumeration agrees with brute-force classification") {
  struct P {
    int q, n, d, m;
  };
  for (const P p : {P{2, 4, 2, 4}, P{2, 4, 2, 8}, P{2, 4, 1, 5}, P{3, 3, 2, 9}, P{3, 3, 2, 5}, P{2, 5, 3, 4},
                    P{3, 4, 3, 9}, P{2, 5, 2, 4}, P{3, 3, 1, 4}, P{4, 3, 3, 4}}) {
    CAPTURE(p.q);
    CAPTURE(p.n);
    CAPTURE(p.d);
    CAPTURE(p.m);
    const auto got = enumerate_codes(task_for(p.q, p.n, p.d, p.m));
    const auto want = oracle::brute_classes(p.q, p.n, p.d, p.m);
    CHECK(as_rows(got) == want);
    CHECK(got.size() == want.size());
    for (const Code& c : got) CHECK(is_canonical(c));
    CHECK(std::is_sorted(got.begin(), got.end()));
  }
}

TEST_CASE("no codes above the maximum size") {
  CHECK(enumerate_codes(task_for(3, 3, 2, 10)).empty());
  CHECK(enumerate_codes(task_for(2, 5, 3, 5)).empty());
}

TEST_CASE("the Latin square code is unique") {
  const auto cs = enumerate_codes(task_for(3, 3, 2, 9));
  REQUIRE(cs.size() == 1);
  // Words of one parallel class are at distance 3, all others at distance 2.
  std::vector<int> want(27, 2);
  want.insert(want.end(), 9, 3);
  CHECK(distance_multiset(cs[0]) == want);
}

TEST_CASE("output does not depend on the thread count") {
  for (const int threads : {1, 2, 4}) {
    CHECK(enumerate_codes(task_for(2, 6, 3, 6, threads)) == enumerate_codes(task_for(2, 6, 3, 6, 1)));
    CHECK(enumerate_codes(task_for(3, 4, 2, 7, threads)) == enumerate_codes(task_for(3, 4, 2, 7, 1)));
  }
}

TEST_CASE("existence mode") {
  auto t = task_for(2, 5, 3, 4);
  t.mode = EnumerationMode::ExistenceOnly;
  CHECK(enumerate_codes(t).size() == 1);
  t.target_size = 5;
  CHECK(enumerate_codes(t).empty());
}

TEST_CASE("budgets") {
  auto t = task_for(3, 5, 2, 12);
  t.limits.max_nodes = 10;
  CHECK_THROWS_AS(run_enumeration(t), BudgetExceeded);
  t.limits.max_nodes = 1'000'000'000ULL;
  t.limits.max_time = std::chrono::seconds(0);
  CHECK_THROWS_AS(run_enumeration(t), BudgetExceeded);
  CHECK_THROWS_AS(run_enumeration(task_for(16, 7, 6, 3)), BudgetExceeded);  // 16^7 words
  CHECK_THROWS_AS(run_enumeration(task_for(2, 3, 2, 0)), PreconditionError);
}

TEST_CASE("deletion from the Latin square code") {
  const auto parents = enumerate_codes(task_for(3, 3, 2, 9));
  const auto children = codes_by_deletion(parents);
  CHECK(children == enumerate_codes(task_for(3, 3, 2, 8)));
}

TEST_CASE("forced equidistance holds on enumerated codes") {
  for (const Code& c : enumerate_codes(task_for(2, 3, 2, 4))) {
    CHECK(equidistance_forced(CodeParams(2, 3, 2), 4));
    CHECK(distance_multiset(c) == std::vector<int>(6, 2));
  }
  // Every (7,6)_5 code of size 15 is equidistant with each symbol three times per column.
  auto t = task_for(5, 7, 6, 15);
  const auto kirkman = enumerate_codes(t);
  CHECK(kirkman.size() == 7);
  for (const Code& c : kirkman) {
    CHECK(distance_multiset(c) == std::vector<int>(105, 6));
    const auto p = column_profile(c);
    for (int j = 0; j < 7; ++j) {
      for (int a = 0; a < 5; ++a) CHECK(p.count(static_cast<Symbol>(a), j) == 3);
    }
  }
}

TEST_CASE("extend_deficient") {
  const Code latin = enumerate_codes(task_for(3, 3, 2, 9)).front();
  for (std::size_t i = 0; i < latin.size(); ++i) CHECK(extend_deficient(latin.without(i), 2) == latin);

  const Code odd(2, 3, {Word{0, 0, 1}, Word{0, 1, 0}, Word{1, 0, 0}});
  CHECK(extend_deficient(odd, 2) == odd.with(Word{1, 1, 1}));

  auto kind = [](const Code& c, int d) {
    try {
      (void)extend_deficient(c, d);
    } catch (const ExtensionError& e) {
      return e.kind();
    }
    FAIL("no error");
    return ExtensionFailure::InvalidCode;
  };
  CHECK(kind(odd, 3) == ExtensionFailure::InvalidCode);
  CHECK(kind(Code(2, 3, {Word{0, 0, 0}}), 1) == ExtensionFailure::InvalidCode);
  CHECK(kind(latin.without(0).without(0), 2) == ExtensionFailure::Size);
  CHECK(kind(Code(2, 3, {Word{0, 0, 0}, Word{0, 1, 1}}), 2) == ExtensionFailure::Size);
  CHECK(kind(Code(2, 3, {Word{0, 0, 0}, Word{0, 0, 1}, Word{0, 1, 0}}), 1) == ExtensionFailure::Parameters);
}

TEST_CASE("alpha statistics against a direct count") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 20; ++t) {
    const int q = 3 + t % 3, n = 4 + t % 2, d = 3;
    const Code D = oracle::random_code(rng, q, n, d, 10);
    std::vector<std::uint64_t> hist;
    std::uint64_t in_s = 0, cand = 0;
    for (const auto& u : oracle::all_words(q, n)) {
      int alpha = 0;
      bool in = true, far = true;
      for (const auto& w : oracle::rows_of(D)) {
        const int dist = oracle::distance(u, w);
        in = in && dist >= d - 1;
        far = far && dist >= d;
        alpha += dist == d;
      }
      cand += far;
      if (!in) continue;
      ++in_s;
      if (hist.size() <= static_cast<std::size_t>(alpha)) hist.resize(alpha + 1, 0);
      ++hist[alpha];
    }
    const AlphaStats a = alpha_stats(D, d);
    CHECK(a.s_size == in_s);
    for (std::size_t k = 0; k < hist.size() + 2; ++k) CHECK(a.count(k) == (k < hist.size() ? hist[k] : 0));
    CHECK(candidate_count(D, d) == cand);
  }
}

TEST_CASE("serial and parallel scans agree") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 30; ++t) {
    const int q = 2 + t % 5, n = 3 + t % 5;
    const Code D = oracle::random_code(rng, q, n, 2, 15);
    for (int thr = 1; thr <= n; thr += 2) {
      CHECK(kernels::scan_words_serial(D, thr, thr) == kernels::scan_words_parallel(D, thr, thr));
      CHECK(kernels::scan_words_serial(D, thr - 1, thr) == kernels::scan_words_parallel(D, thr - 1, thr));
    }
  }
  CHECK_THROWS_AS(kernels::scan_words_serial(Code(4, 9, {Word(std::vector<Symbol>(9, 0))}), 1, 1, 1000),
                  BudgetExceeded);
}
