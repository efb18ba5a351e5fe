#include "doctest.h"

#include <random>

#include "coxgs/completion.hpp"
#include "coxgs/coxeter.hpp"
#include "coxgs/errors.hpp"
#include "coxgs/factor_index.hpp"
#include "coxgs/oracle.hpp"
#include "coxgs/rewrite.hpp"
#include "support.hpp"

using namespace coxgs;
using test_support::W;

namespace {
  RewriteSystem completed(char const* preset) {
    auto pr = preset_presentation(parse_preset(preset));
    auto r  = complete(pr.relations, pr.alphabet);
    REQUIRE(r.status == CompletionStatus::closed);
    return std::move(r.system);
  }

  RewriteSystem initial(char const* preset) {
    auto pr = preset_presentation(parse_preset(preset));
    return RewriteSystem(pr.alphabet, pr.relations);
  }
}  // namespace

TEST_CASE("rules must be oriented") {
  auto a = Alphabet::indexed(3, {2, 1, 0});
  CHECK_NOTHROW(make_rule(0, W({2, 1, 2}), W({1, 2, 1}), a));
  CHECK_NOTHROW(make_rule(0, W({1, 1}), {}, a));
  CHECK_THROWS_AS(make_rule(0, W({1, 2, 1}), W({2, 1, 2}), a), InvalidInput);
  CHECK_THROWS_AS(make_rule(0, W({1}), W({1}), a), InvalidInput);
  CHECK_THROWS_AS(make_rule(0, {}, {}, a), InvalidInput);
  CHECK_THROWS_AS(make_rule(0, W({5}), {}, a), InvalidInput);
  auto r = oriented_rule(4, W({1, 2, 1}), W({2, 1, 2}), a);
  CHECK(r.id == 4);
  CHECK(r.lhs == W({2, 1, 2}));
  CHECK_THROWS_AS(oriented_rule(0, W({1}), W({1}), a), InvalidInput);
}

TEST_CASE("system bookkeeping") {
  auto          a = Alphabet::indexed(2, {1, 0});
  RewriteSystem sys(a);
  sys.add(make_rule(0, W({1, 1}), {}, a));
  sys.add(make_rule(1, W({1, 0, 1}), W({0, 1, 0}), a));
  CHECK(sys.size() == 2);
  CHECK(sys.contains(1));
  CHECK(sys.next_id() == 2);
  CHECK_THROWS_AS(sys.add(make_rule(1, W({0, 0}), {}, a)), InvalidInput);
  CHECK(sys.left_sides_factor_free());
  sys.add(make_rule(7, W({1, 1, 0}), W({0}), a));
  CHECK_FALSE(sys.left_sides_factor_free());
  CHECK(sys.next_id() == 8);
  sys.remove(7);
  CHECK(sys.left_sides_factor_free());
  CHECK_THROWS_AS(sys.remove(7), InvalidInput);
  CHECK_THROWS_AS(sys.rule(7), InvalidInput);
  sys.replace_rhs(1, W({0, 0}));
  CHECK(sys.rule(1).rhs == W({0, 0}));
  CHECK_THROWS_AS(sys.replace_rhs(1, W({1, 1, 1})), InvalidInput);
}

TEST_CASE("reduce_once examples") {
  auto sys = initial("affine-a:3");
  auto r   = sys.reduce_once(W({1, 1}));
  REQUIRE(r);
  CHECK(r->result.empty());
  CHECK(sys.rule(r->rule).lhs == W({1, 1}));
  CHECK(r->position == 0);

  // A(2): letters s1, s2 are 0, 1
  auto a2 = initial("a:2");
  auto b  = a2.reduce_once(W({1, 0, 1}));
  REQUIRE(b);
  CHECK(b->result == W({0, 1, 0}));
  CHECK(a2.rule(b->rule).lhs == W({1, 0, 1}));
  CHECK_FALSE(a2.reduce_once(W({0, 1, 0})));
}

TEST_CASE("strategies pick leftmost or rightmost, lowest id on ties") {
  auto          a = Alphabet::indexed(3, {2, 1, 0});
  RewriteSystem sys(a);
  sys.add(make_rule(5, W({2, 1}), W({1}), a));
  sys.add(make_rule(2, W({2, 1, 0}), W({0}), a));
  sys.add(make_rule(3, W({1, 0}), W({0}), a));
  auto w = W({2, 1, 0});
  auto l = sys.reduce_once(w, Strategy::leftmost);
  REQUIRE(l);
  CHECK(l->position == 0);
  CHECK(l->rule == 2);
  auto r = sys.reduce_once(w, Strategy::rightmost);
  REQUIRE(r);
  CHECK(r->position == 1);
  CHECK(r->rule == 3);
}

TEST_CASE("normal form examples") {
  auto a3 = completed("affine-a:3");
  CHECK(a3.normal_form(W({3, 0, 1, 0})) == W({1, 3, 0, 1}));
  for (letter_type s = 0; s < 4; ++s) {
    CHECK(a3.normal_form(W({s, s})).empty());
  }
  auto a2 = completed("a:2");
  auto w  = W({1, 0, 1, 1});
  CHECK(a2.normal_form(w) == W({1, 0}));
  // every reduction order ends in the same word
  auto all = test_support::irreducible_descendants(w, a2.rules());
  CHECK(all == std::set<word_type>{W({1, 0})});
  CHECK(a2.is_irreducible({}));
  CHECK(a2.is_irreducible(W({0, 1, 0})));
  auto a4 = completed("affine-a:4:desc");
  CHECK_FALSE(a4.is_irreducible(W({0, 4, 1, 2, 3, 4, 0, 4, 3})));
  CHECK_THROWS_AS(a2.normal_form(W({2})), InvalidInput);
}

TEST_CASE("factor index agrees with a direct scan") {
  std::mt19937_64 rng(test_support::seed() + 2);
  for (int trial = 0; trial < 50; ++trial) {
    FactorIndex              ix(3);
    std::vector<word_type>   pats;
    std::size_t              np = 1 + rng() % 8;
    for (std::size_t i = 0; i < np; ++i) {
      auto p = test_support::random_word(rng, 3, 4);
      if (p.empty()) {
        p.push_back(0);
      }
      pats.push_back(p);
      ix.add(p, static_cast<FactorIndex::key_type>(i));
    }
    ix.build();
    for (int k = 0; k < 40; ++k) {
      auto w = test_support::random_word(rng, 3, 15);
      std::vector<std::pair<std::size_t, FactorIndex::key_type>> want;
      for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = 0; j < pats.size(); ++j) {
          if (test_support::occurs_at(w, pats[j], i)) {
            want.emplace_back(i, static_cast<FactorIndex::key_type>(j));
          }
        }
      }
      CHECK(ix.all_occurrences(w) == want);
    }
  }
  FactorIndex ix(2);
  CHECK_THROWS_AS(ix.add({}, 0), InvalidInput);
  CHECK_THROWS_AS(ix.add(W({2}), 0), InvalidInput);
}

TEST_CASE("normal forms are irreducible, smaller, and denote the same element") {
  std::mt19937_64 rng(test_support::seed() + 3);
  for (auto name : {"a:4", "b:3", "d:4", "affine-a:3", "affine-a:4:desc"}) {
    auto p   = parse_preset(name);
    auto sys = completed(name);
    auto ref = test_support::ref_model(p);
    auto const k = sys.alphabet().size();
    for (int trial = 0; trial < 200; ++trial) {
      auto        w     = test_support::random_word(rng, k, 30);
      std::size_t steps = 0;
      auto        nf    = sys.normal_form(w, Strategy::leftmost, &steps);
      CHECK(sys.is_irreducible(nf));
      CHECK(test_support::naive_irreducible(nf, sys.rules()));
      CHECK(deglex_compare(nf, w, sys.alphabet()) != std::strong_ordering::greater);
      CHECK((steps == 0) == (nf == w));
      CHECK(ref.eval(nf) == ref.eval(w));
    }
  }
}

TEST_CASE("normal form without a factor-free index") {
  auto          a = Alphabet::indexed(2, {1, 0});
  RewriteSystem sys(a);
  sys.add(make_rule(0, W({1, 1}), {}, a));
  sys.add(make_rule(1, W({1, 1, 1}), W({1}), a));
  CHECK_FALSE(sys.left_sides_factor_free());
  CHECK(sys.normal_form(W({1, 1, 1, 1, 1})) == W({1}));
  CHECK(sys.normal_form(W({0, 1, 1, 0})) == W({0, 0}));
}

TEST_CASE("same_rules compares rule sets") {
  auto x = completed("a:3");
  auto y = completed("a:3");
  CHECK(same_rules(x, y));
  auto z = completed("b:3");
  CHECK_FALSE(same_rules(x, z));
}
