#include "doctest.h"

#include <random>

#include "coxgs/errors.hpp"
#include "coxgs/words.hpp"
#include "support.hpp"

using namespace coxgs;
using test_support::W;

namespace {
  // s0 < s1 < s2 < s3
  Alphabet ascending4() {
    return Alphabet::indexed(4, {3, 2, 1, 0});
  }
}  // namespace

TEST_CASE("alphabet construction") {
  Alphabet a({"x", "y", "z"}, {1, 2, 0});
  CHECK(a.size() == 3);
  CHECK(a.name(2) == "z");
  CHECK(a.letter("y") == 1);
  CHECK(a.weight(1) == 2);
  CHECK(a.weight(0) == 0);
  CHECK(a.contains_name("x"));
  CHECK_FALSE(a.contains_name("w"));

  auto b = Alphabet::indexed(3, {2, 1, 0}, 1);
  CHECK(b.names() == std::vector<std::string>{"s1", "s2", "s3"});

  CHECK_THROWS_AS(Alphabet({}, {}), InvalidInput);
  CHECK_THROWS_AS(Alphabet({"a", "a"}, {0, 1}), InvalidInput);
  CHECK_THROWS_AS(Alphabet({"a", "1"}, {0, 1}), InvalidInput);
  CHECK_THROWS_AS(Alphabet({"a b", "c"}, {0, 1}), InvalidInput);
  CHECK_THROWS_AS(Alphabet({"a", "b"}, {0, 0}), InvalidInput);
  CHECK_THROWS_AS(Alphabet({"a", "b"}, {0}), InvalidInput);
  CHECK_THROWS_AS(a.letter("w"), InvalidInput);
  CHECK_THROWS_AS(a.name(3), InvalidInput);
}

TEST_CASE("deglex examples") {
  auto a = ascending4();
  CHECK(deglex_compare(W({0, 1}), W({2}), a) == std::strong_ordering::greater);
  CHECK(deglex_compare(W({1, 0, 1}), W({1, 0, 1}), a) == std::strong_ordering::equal);
  CHECK(deglex_compare(W({1, 0, 1}), W({0, 1, 0}), a) == std::strong_ordering::greater);
  // the ranking, not the index, decides
  auto d = Alphabet::indexed(4, {0, 1, 2, 3});
  CHECK(deglex_compare(W({1, 0, 1}), W({0, 1, 0}), d) == std::strong_ordering::less);
  CHECK(deglex_compare({}, {}, a) == std::strong_ordering::equal);
  CHECK_THROWS_AS(deglex_compare(W({4}), W({0}), a), InvalidInput);
}

TEST_CASE("deglex is a total monomial order") {
  std::mt19937_64 rng(test_support::seed());
  auto            a = Alphabet::indexed(4, {2, 0, 3, 1});
  std::vector<std::size_t> weight(4);
  for (letter_type x = 0; x < 4; ++x) {
    weight[x] = a.weight(x);
  }
  for (int trial = 0; trial < 2000; ++trial) {
    auto u = test_support::random_word(rng, 4, 6);
    auto v = test_support::random_word(rng, 4, 6);
    auto w = test_support::random_word(rng, 4, 6);
    auto uv = deglex_compare(u, v, a);
    auto vu = deglex_compare(v, u, a);
    // antisymmetry and agreement with the reference comparison
    CHECK((uv == std::strong_ordering::less) == (vu == std::strong_ordering::greater));
    CHECK((uv == std::strong_ordering::equal) == (u == v));
    CHECK((uv == std::strong_ordering::less) == test_support::naive_deglex_less(u, v, weight));
    // transitivity
    if (uv == std::strong_ordering::less && deglex_compare(v, w, a) == std::strong_ordering::less) {
      CHECK(deglex_compare(u, w, a) == std::strong_ordering::less);
    }
    // compatible with concatenation on both sides
    auto p = test_support::random_word(rng, 4, 3);
    auto q = test_support::random_word(rng, 4, 3);
    CHECK(deglex_compare(concat({p, u, q}), concat({p, v, q}), a) == uv);
  }
}

TEST_CASE("ambiguity examples") {
  SUBCASE("self-overlap") {
    auto amb = find_ambiguities(W({1, 0, 1}), W({1, 0, 1}));
    REQUIRE(amb.size() == 1);
    CHECK(amb[0].kind == Ambiguity::Kind::intersection);
    CHECK(amb[0].witness == W({1, 0, 1, 0, 1}));
  }
  SUBCASE("intersection on one letter") {
    auto amb = find_ambiguities(W({0, 1, 0}), W({0, 2}));
    REQUIRE(amb.size() == 1);
    CHECK(amb[0].kind == Ambiguity::Kind::intersection);
    CHECK(amb[0].witness == W({0, 1, 0, 2}));
    CHECK(amb[0].left_margin == W({0, 1}));
    CHECK(amb[0].right_margin == W({2}));
  }
  SUBCASE("inclusion") {
    auto amb = find_ambiguities(W({0, 1, 2, 0}), W({1, 2}));
    REQUIRE(amb.size() == 1);
    CHECK(amb[0].kind == Ambiguity::Kind::inclusion);
    CHECK(amb[0].left_margin == W({0}));
    CHECK(amb[0].right_margin == W({0}));
  }
  SUBCASE("a word does not include itself trivially") {
    CHECK(find_ambiguities(W({0, 1}), W({0, 1})).empty());
    CHECK(find_ambiguities(W({2}), W({2})).empty());
  }
  SUBCASE("empty words are rejected") {
    CHECK_THROWS_AS(find_ambiguities({}, W({0})), InvalidInput);
    CHECK_THROWS_AS(find_ambiguities(W({0}), {}), InvalidInput);
  }
}

TEST_CASE("ambiguities recompose and are complete") {
  std::mt19937_64 rng(test_support::seed() + 1);
  for (int trial = 0; trial < 500; ++trial) {
    auto u = test_support::random_word(rng, 2, 6);
    auto v = test_support::random_word(rng, 2, 6);
    if (u.empty() || v.empty()) {
      continue;
    }
    auto amb = find_ambiguities(u, v);
    std::size_t inter = 0, incl = 0;
    for (auto const& x : amb) {
      if (x.kind == Ambiguity::Kind::intersection) {
        ++inter;
        CHECK(concat({u, x.right_margin}) == x.witness);
        CHECK(concat({x.left_margin, v}) == x.witness);
        CHECK(!x.left_margin.empty());
        CHECK(!x.right_margin.empty());
        CHECK(u.size() + v.size() > x.witness.size());
      } else {
        ++incl;
        CHECK(x.witness == u);
        CHECK(concat({x.left_margin, v, x.right_margin}) == u);
      }
    }
    // reference counts: proper overlaps and occurrences
    std::size_t want_inter = 0, want_incl = 0;
    for (std::size_t k = 1; k < std::min(u.size(), v.size()); ++k) {
      want_inter += std::equal(u.end() - static_cast<std::ptrdiff_t>(k), u.end(), v.begin());
    }
    for (std::size_t i = 0; i + v.size() <= u.size(); ++i) {
      want_incl += test_support::occurs_at(u, v, i) && !(u == v);
    }
    CHECK(inter == want_inter);
    CHECK(incl == want_incl);
  }
}

TEST_CASE("factor search") {
  auto w = W({0, 1, 0, 1, 2});
  CHECK(find_factor(w, W({0, 1})) == 0);
  CHECK(find_factor(w, W({0, 1}), 1) == 2);
  CHECK(find_factor(w, W({2, 0})) == w.size());
  CHECK(contains_factor(w, W({1, 2})));
  CHECK(contains_factor(w, {}));
  CHECK_FALSE(contains_factor(W({}), W({0})));
}

TEST_CASE("word text") {
  auto a = ascending4();
  CHECK(to_string(W({1, 0, 3}), a) == "s1 s0 s3");
  CHECK(to_string({}, a) == "1");
  CHECK(parse_word("s1 s0  s3", a) == W({1, 0, 3}));
  CHECK(parse_word("1", a).empty());
  CHECK(parse_word("  1 ", a).empty());
  CHECK(parse_word("", a).empty());
  CHECK_THROWS_AS(parse_word("s1 1", a), InvalidInput);
  CHECK_THROWS_AS(parse_word("s7", a), InvalidInput);
  for (auto const& w : {W({}), W({3, 3, 0}), W({2})}) {
    CHECK(parse_word(to_string(w, a), a) == w);
  }
}
