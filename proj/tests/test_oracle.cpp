#include "doctest.h"

#include <random>

#include "coxgs/coxeter.hpp"
#include "coxgs/errors.hpp"
#include "coxgs/oracle.hpp"
#include "support.hpp"

using namespace coxgs;
using test_support::W;

namespace {
  std::vector<std::int64_t> as_window(std::vector<long> const& w) {
    return {w.begin(), w.end()};
  }

  char const* const all_presets[] = {"a:1",  "a:2",  "a:3",        "a:5",        "b:2",
                                     "b:3",  "b:4",  "d:3",        "d:4",        "d:5",
                                     "affine-a:1", "affine-a:2", "affine-a:3", "affine-a:4:desc"};
}  // namespace

TEST_CASE("generator actions") {
  auto p = parse_preset("a:3");
  CHECK(generator_action(p, 0).window() == std::vector<std::int64_t>{2, 1, 3, 4});
  CHECK(generator_action(p, 2).window() == std::vector<std::int64_t>{1, 2, 4, 3});
  CHECK(generator_action(parse_preset("b:2"), 1).window() == std::vector<std::int64_t>{1, -2});
  CHECK(generator_action(parse_preset("d:3"), 2).window() == std::vector<std::int64_t>{1, -3, -2});
  CHECK(generator_action(parse_preset("affine-a:2"), 0).window()
        == std::vector<std::int64_t>{0, 2, 4});
  CHECK_THROWS_AS(generator_action(p, 3), InvalidInput);
  CHECK(GroupElement::identity(p).is_identity());
  CHECK(element_of(p, {}).is_identity());

  for (auto name : all_presets) {
    CAPTURE(name);
    auto p2 = parse_preset(name);
    auto n  = preset_matrix(p2).matrix.size();
    for (letter_type s = 0; s < n; ++s) {
      CHECK(element_of(p2, W({s, s})).is_identity());
      CHECK_FALSE(generator_action(p2, s).is_identity());
    }
  }
}

TEST_CASE("braid orders equal the matrix entries") {
  for (auto name : all_presets) {
    CAPTURE(name);
    auto p = parse_preset(name);
    auto m = preset_matrix(p).matrix;
    for (letter_type s = 0; s < m.size(); ++s) {
      for (letter_type t = 0; t < m.size(); ++t) {
        if (s == t) {
          continue;
        }
        CHECK(element_order(p, W({s, t}), 50) == m(s, t));
      }
    }
  }
}

TEST_CASE("word examples") {
  auto p = parse_preset("affine-a:3");
  CHECK(element_of(p, W({1, 0, 1})) == element_of(p, W({0, 1, 0})));
  CHECK(element_of(p, W({0, 2})) == element_of(p, W({2, 0})));
  CHECK(element_of(p, W({3, 0, 3})) == element_of(p, W({0, 3, 0})));
  CHECK_FALSE(element_of(p, W({0, 1})) == element_of(p, W({1, 0})));
  CHECK_THROWS_AS(element_of(p, W({4})), InvalidInput);
}

TEST_CASE("window validation") {
  CHECK_THROWS_AS(GroupElement(Family::A, {1, 1, 3}), InvalidInput);
  CHECK_THROWS_AS(GroupElement(Family::A, {1, 2, 4}), InvalidInput);
  CHECK_THROWS_AS(GroupElement(Family::B, {1, -1}), InvalidInput);
  CHECK_THROWS_AS(GroupElement(Family::D, {-1, 2}), InvalidInput);
  CHECK_NOTHROW(GroupElement(Family::D, {-1, -2}));
  CHECK_NOTHROW(GroupElement(Family::affine_A, {0, 2, 4}));
  CHECK_THROWS_AS(GroupElement(Family::affine_A, {0, 2, 5}), InvalidInput);
  CHECK_THROWS_AS(GroupElement(Family::affine_A, {1, 4, 3}), InvalidInput);
}

TEST_CASE("agreement with the reference model") {
  std::mt19937_64 rng(test_support::seed());
  for (auto name : all_presets) {
    CAPTURE(name);
    auto p   = parse_preset(name);
    auto ref = test_support::ref_model(p);
    auto n   = preset_matrix(p).matrix.size();
    for (int it = 0; it < 200; ++it) {
      auto w = test_support::random_word(rng, n, 15);
      CHECK(element_of(p, w).window() == as_window(ref.eval(w)));
    }
  }
}

TEST_CASE("Cayley growth") {
  auto a2 = cayley_growth(parse_preset("a:2"), 5);
  CHECK(a2.counts == std::vector<std::uint64_t>{1, 2, 2, 1, 0, 0});
  CHECK(a2.total == 6u);
  CHECK(cayley_growth(parse_preset("b:2"), 10).total == 8u);
  std::pair<char const*, std::uint64_t> const totals[] = {
      {"a:3", 24}, {"a:4", 120}, {"a:5", 720}, {"b:3", 48}, {"b:4", 384}, {"d:3", 24}, {"d:4", 192},
  };
  for (auto const& [cname, total] : totals) {
    std::string name = cname;
    CAPTURE(name);
    auto g = cayley_growth(parse_preset(name), 100);
    CHECK(g.total == total);
    std::uint64_t sum = 0;
    for (auto c : g.counts) {
      sum += c;
    }
    CHECK(sum == total);
    // the growth of a finite Coxeter group is palindromic
    while (g.counts.back() == 0) {
      g.counts.pop_back();
    }
    auto rev = g.counts;
    std::reverse(rev.begin(), rev.end());
    CHECK(rev == g.counts);
  }
  auto x2 = cayley_growth(parse_preset("affine-a:2"), 4);
  CHECK(x2.counts.size() == 5);
  CHECK_FALSE(x2.total.has_value());
  for (auto c : x2.counts) {
    CHECK(c > 0);
  }
  CHECK(x2.counts == std::vector<std::uint64_t>{1, 3, 6, 9, 12});
  // infinite dihedral group
  CHECK(cayley_growth(parse_preset("affine-a:1"), 5).counts
        == std::vector<std::uint64_t>{1, 2, 2, 2, 2, 2});
  CHECK_THROWS_AS(cayley_growth(parse_preset("affine-a:3"), 30, 1000), ResourceError);
  CHECK_THROWS_AS(cayley_growth(parse_preset("a:5"), 30, 100), ResourceError);
}
