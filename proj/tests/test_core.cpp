#include <doctest.h>

#include <random>

#include "codebounds/canonical.hpp"
#include "codebounds/code_io.hpp"
#include "codebounds/equivalence.hpp"
#include "codebounds/errors.hpp"
#include "oracles.hpp"

using namespace codebounds;

TEST_CASE("hamming distance") {
  CHECK(hamming_distance(Word{0, 1, 2}, Word{0, 2, 2}) == 1);
  CHECK(hamming_distance(Word{0, 0, 0}, Word{1, 1, 1}) == 3);
  CHECK(hamming_distance(Word{1, 1}, Word{1, 1}) == 0);
  CHECK(agreement(Word{0, 1, 2, 3}, Word{0, 1, 0, 0}) == 2);
  CHECK_THROWS_AS(hamming_distance(Word{0, 1}, Word{0, 1, 2}), LengthMismatch);
}

TEST_CASE("metric axioms on random triples") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> qdist(2, 16), ndist(1, 16);
  int violations = 0;
  for (int t = 0; t < 10000; ++t) {
    const int q = qdist(rng), n = ndist(rng);
    std::uniform_int_distribution<int> sym(0, q - 1);
    auto rnd = [&] {
      std::vector<Symbol> s(static_cast<std::size_t>(n));
      for (auto& x : s) x = static_cast<Symbol>(sym(rng));
      return Word(s);
    };
    const Word u = rnd(), v = rnd(), w = rnd();
    const int uv = hamming_distance(u, v);
    violations += hamming_distance(u, u) != 0;
    violations += (uv == 0) != (u == v);
    violations += uv != hamming_distance(v, u);
    violations += hamming_distance(u, w) > uv + hamming_distance(v, w);
    violations += packed_distance(pack(u), pack(v)) != uv;
    violations += unpack(pack(u), n) != u;
  }
  CHECK(violations == 0);
}

TEST_CASE("packed order is lexicographic") {
  CHECK(pack(Word{0, 1, 2}) < pack(Word{0, 2, 0}));
  CHECK(pack(Word{1, 0, 0}) > pack(Word{0, 15, 15}));
  CHECK(packed_symbol(pack(Word{3, 4, 5}), 3, 1) == 4);
}

TEST_CASE("code construction") {
  const Code c(3, 2, {Word{2, 1}, Word{0, 0}, Word{1, 2}});
  CHECK(c.size() == 3);
  CHECK(c[0] == Word{0, 0});  // sorted
  CHECK(min_distance(c) == 2);
  CHECK(has_min_distance(c, 2));
  CHECK_FALSE(has_min_distance(c, 3));
  CHECK(distance_multiset(c) == std::vector<int>{2, 2, 2});
  CHECK_THROWS_AS(Code(2, 2, {Word{0, 0}, Word{0, 0}}), PreconditionError);
  CHECK_THROWS_AS(Code(2, 2, {Word{0, 2}}), PreconditionError);
  CHECK_THROWS_AS(Code(2, 2, {Word{0, 1, 0}}), LengthMismatch);
  CHECK_THROWS_AS(min_distance(Code(2, 2, {Word{0, 1}})), UndefinedDistance);
  CHECK_THROWS_AS(CodeParams(1, 3, 2), PreconditionError);
  CHECK_THROWS_AS(CodeParams(2, 3, 4), PreconditionError);
  CHECK_THROWS_AS(CodeParams(2, 3, 0), PreconditionError);
}

TEST_CASE("column profile, blocks and column deletion") {
  const Code c(3, 3, {Word{0, 0, 0}, Word{0, 1, 1}, Word{1, 2, 0}, Word{2, 0, 1}});
  const auto p = column_profile(c);
  CHECK(p.count(0, 0) == 2);
  CHECK(p.count(1, 0) == 1);
  CHECK(p.histogram[0][2] == 1);
  CHECK(p.histogram[0][1] == 2);
  const Block b = extract_block(c, 0, 0);
  CHECK(b.size() == 2);
  CHECK(b.projected() == Code(3, 2, {Word{0, 0}, Word{1, 1}}));
  CHECK(delete_column(c, 2).size() == 4);
  CHECK_THROWS_AS(delete_column(Code(2, 2, {Word{0, 0}, Word{0, 1}}), 1), StructureError);
}

TEST_CASE("code file round trip and parse errors") {
  const Code c(3, 3, {Word{0, 1, 2}, Word{1, 2, 0}, Word{2, 0, 1}});
  CHECK(parse_code(emit_code(c)) == c);
  CHECK(emit_code(c) == "3 3 3\n0 1 2\n1 2 0\n2 0 1\n");
  CHECK(parse_code("# comment\n2 2 2\n0 1\n\n1 0\n") == Code(2, 2, {Word{0, 1}, Word{1, 0}}));

  auto kind_of = [](const std::string& text) {
    try {
      (void)parse_code(text);
    } catch (const ParseError& e) {
      return std::make_pair(e.kind(), e.line());
    }
    return std::make_pair(ParseErrorKind::MalformedHeader, std::size_t{0});
  };
  CHECK(kind_of("2 2\n") == std::make_pair(ParseErrorKind::MalformedHeader, std::size_t{1}));
  CHECK(kind_of("2 2 1\n0 x\n") == std::make_pair(ParseErrorKind::MalformedRow, std::size_t{2}));
  CHECK(kind_of("2 2 1\n0 2\n") == std::make_pair(ParseErrorKind::SymbolOutOfRange, std::size_t{2}));
  CHECK(kind_of("2 2 2\n0 1\n0 1\n") == std::make_pair(ParseErrorKind::DuplicateWord, std::size_t{3}));
  CHECK(kind_of("2 2 1\n0 1 1\n") == std::make_pair(ParseErrorKind::LengthMismatch, std::size_t{2}));
  CHECK(kind_of("2 2 3\n0 1\n") == std::make_pair(ParseErrorKind::RowCount, std::size_t{2}));
  CHECK(kind_of("2 2 1\n0 1\n1 1\n") == std::make_pair(ParseErrorKind::RowCount, std::size_t{3}));
}

TEST_CASE("class list round trip") {
  ClassList l{2, 3, 2, 2, "gen-x", {Code(2, 3, {Word{0, 0, 0}, Word{0, 1, 1}}), Code(2, 3, {Word{0, 0, 0}, Word{1, 1, 1}})}};
  const auto back = parse_class_list(emit_class_list(l));
  CHECK(back.classes == l.classes);
  CHECK(back.generator == "gen-x");
  CHECK(back.d == 2);
  CHECK_THROWS_AS(parse_class_list("classes 2 2 3 2 2 g\n2 3 2\n0 0 0\n0 1 1\n"), ParseError);
}

TEST_CASE("equivalence maps") {
  const EquivalenceMap e({2, 0, 1}, {{1, 0}, {0, 1}, {1, 0}});
  CHECK(e.apply(Word{0, 1, 1}) == Word{0, 0, 0});
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto a = EquivalenceMap::random(4, 5, rng);
    const auto b = EquivalenceMap::random(4, 5, rng);
    const Word w{0, 3, 2, 1, 3};
    CHECK(a.inverse().apply(a.apply(w)) == w);
    CHECK(a.then(b).apply(w) == b.apply(a.apply(w)));
    CHECK(a.then(a.inverse()) == EquivalenceMap::identity(4, 5));
  }
  CHECK_THROWS_AS(EquivalenceMap({0, 0}, {{0, 1}, {0, 1}}), PreconditionError);
  CHECK_THROWS_AS(apply_equivalence(Code(2, 2, {Word{0, 1}}), EquivalenceMap::identity(2, 3)), PreconditionError);
}

TEST_CASE("distance multisets are invariant under random equivalences") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> qd(2, 5), nd(2, 8);
  int violations = 0;
  for (int t = 0; t < 1000; ++t) {
    const int q = qd(rng), n = nd(rng);
    const Code c = oracle::random_code(rng, q, n, 1 + n / 3, 12);
    const Code e = apply_equivalence(c, EquivalenceMap::random(q, n, rng));
    violations += distance_multiset(c) != distance_multiset(e);
  }
  CHECK(violations == 0);
}

TEST_CASE("canonical form agrees with the brute-force group orbit minimum") {
  std::mt19937_64 rng(5);
  struct Shape {
    int q, n, d, tries;
  };
  for (const Shape s : {Shape{2, 4, 1, 8}, Shape{2, 4, 2, 10}, Shape{3, 3, 1, 10}, Shape{3, 3, 2, 20},
                        Shape{2, 5, 2, 12}, Shape{4, 2, 1, 10}, Shape{3, 4, 2, 10}}) {
    for (int t = 0; t < 20; ++t) {
      const Code c = oracle::random_code(rng, s.q, s.n, s.d, s.tries);
      const Code cf = canonical_form(c);
      CHECK(oracle::rows_of(cf) == oracle::brute_canonical(c));
      CHECK(is_canonical(cf));
      CHECK(is_canonical(c) == (c == cf));
      const Code moved = apply_equivalence(c, EquivalenceMap::random(s.q, s.n, rng));
      CHECK(canonical_form(moved) == cf);
      CHECK(equivalent(c, moved));
    }
  }
}

TEST_CASE("inequivalent codes have different canonical forms") {
  const Code a(2, 3, {Word{0, 0, 0}, Word{0, 1, 1}});
  const Code b(2, 3, {Word{0, 0, 0}, Word{1, 1, 1}});
  CHECK_FALSE(equivalent(a, b));
  CHECK_FALSE(equivalent(a, Code(2, 4, {Word{0, 0, 0, 0}, Word{0, 1, 1, 0}})));
}
