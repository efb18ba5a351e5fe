#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "coxgs/completion.hpp"
#include "coxgs/coxeter.hpp"
#include "coxgs/enumerate.hpp"
#include "coxgs/errors.hpp"
#include "support.hpp"

using namespace coxgs;
using test_support::W;

namespace {
  RewriteSystem completed(Preset const& p) {
    auto pr = preset_presentation(p);
    auto r  = complete(pr.relations, pr.alphabet);
    REQUIRE(r.status == CompletionStatus::closed);
    return std::move(r.system);
  }

  // Breadth-first search over the reference model.
  std::vector<std::uint64_t> ref_growth(Preset const& p, std::size_t max_len) {
    auto const ref = test_support::ref_model(p);
    std::size_t const k = preset_matrix(p).matrix.size();
    std::set<std::vector<long>> seen{ref.identity()};
    std::vector<std::vector<long>> layer{ref.identity()};
    std::vector<std::uint64_t> c{1};
    for (std::size_t n = 1; n <= max_len && !layer.empty(); ++n) {
      std::vector<std::vector<long>> next;
      for (auto const& g : layer) {
        for (std::size_t s = 0; s < k; ++s) {
          auto h = ref.times(g, s);
          if (seen.insert(h).second) {
            next.push_back(std::move(h));
          }
        }
      }
      if (next.empty()) {
        break;
      }
      c.push_back(next.size());
      layer = std::move(next);
    }
    return c;
  }
}  // namespace

TEST_CASE("growth examples") {
  auto a2 = growth(completed(parse_preset("a:2")), 5);
  CHECK(a2.counts == std::vector<std::uint64_t>{1, 2, 2, 1, 0, 0});
  CHECK(a2.total == 6u);
  auto a3 = growth(completed(parse_preset("a:3")), 6);
  CHECK(a3.counts == std::vector<std::uint64_t>{1, 3, 5, 6, 5, 3, 1});
  CHECK(a3.total == 24u);

  Alphabet      one = Alphabet::indexed(1, {0});
  RewriteSystem sys(one, {make_rule(0, W({0, 0}), {}, one)});
  auto          g = growth(sys, 5);
  CHECK(g.counts == std::vector<std::uint64_t>{1, 1, 0, 0, 0, 0});
  CHECK(g.total == 2u);
  CHECK(growth(sys, 0).counts == std::vector<std::uint64_t>{1});

  // no rules at all: free monoid
  RewriteSystem free(Alphabet::indexed(2, {1, 0}), {});
  auto          f = growth(free, 4);
  CHECK(f.counts == std::vector<std::uint64_t>{1, 2, 4, 8, 16});
  CHECK_FALSE(f.total.has_value());
  CHECK_FALSE(irreducible_total(free).has_value());
  CHECK_THROWS_AS(growth(free, 70), ResourceError);

  auto x = growth(completed(parse_preset("affine-a:3")), 6);
  CHECK_FALSE(x.total.has_value());
}

TEST_CASE("growth agrees with direct counting") {
  for (auto name : {"a:3", "b:3", "d:4", "affine-a:2", "affine-a:3"}) {
    CAPTURE(name);
    auto sys = completed(parse_preset(name));
    auto g   = growth(sys, 7);
    CHECK(g.counts == test_support::naive_growth(sys.rules(), sys.alphabet().size(), 7));
  }
  // a system that is not a basis of anything in particular
  Alphabet      a = Alphabet::indexed(3, {2, 1, 0});
  RewriteSystem sys(a,
                    {make_rule(0, W({2, 1}), W({0}), a),
                     make_rule(1, W({1, 1, 0}), {}, a),
                     make_rule(2, W({0, 2, 0, 2}), W({1}), a)});
  CHECK(growth(sys, 8).counts == test_support::naive_growth(sys.rules(), 3, 8));
}

TEST_CASE("growth agrees with the group") {
  for (auto name : {"a:2", "a:3", "a:4", "b:2", "b:3", "b:4", "d:3", "d:4", "affine-a:2",
                    "affine-a:3", "affine-a:4:desc"}) {
    CAPTURE(name);
    auto p   = parse_preset(name);
    auto sys = completed(p);
    auto g   = growth(sys, 9);
    auto ref = ref_growth(p, 9);
    ref.resize(10, 0);
    CHECK(g.counts == ref);
  }
}

TEST_CASE("finite totals") {
  std::map<std::string, std::uint64_t> const want{
      {"a:2", 6},  {"a:3", 24},  {"a:4", 120}, {"a:5", 720}, {"b:2", 8},
      {"b:3", 48}, {"b:4", 384}, {"d:3", 24},  {"d:4", 192},
  };
  for (auto const& [name, total] : want) {
    CAPTURE(name);
    auto sys = completed(parse_preset(name));
    CHECK(irreducible_total(sys) == total);
  }
}

TEST_CASE("streaming irreducible words") {
  auto sys  = completed(parse_preset("a:3"));
  auto all  = irreducible_words(sys, 6);
  CHECK(all.size() == 24);
  auto weight = std::vector<std::size_t>(3);
  for (letter_type x = 0; x < 3; ++x) {
    weight[x] = sys.alphabet().weight(x);
  }
  CHECK(std::is_sorted(all.begin(), all.end(), [&](auto const& u, auto const& v) {
    return test_support::naive_deglex_less(u, v, weight);
  }));
  for (auto const& w : all) {
    CHECK(test_support::naive_irreducible(w, sys.rules()));
  }
  CHECK(irreducible_words(sys, 0) == std::vector<word_type>{word_type{}});
  CHECK(irreducible_words(sys, 0, W({0})).empty());

  auto with_prefix = irreducible_words(sys, 6, W({1}));
  for (auto const& w : with_prefix) {
    CHECK(w.front() == 1);
  }
  std::size_t expect = std::count_if(all.begin(), all.end(), [](auto const& w) {
    return !w.empty() && w.front() == 1;
  });
  CHECK(with_prefix.size() == expect);
  CHECK(irreducible_words(sys, 6, W({0, 0})).empty());

  std::size_t seen = 0;
  stream_irreducible(sys, 6, {}, [&](word_type const&) { return ++seen < 5; });
  CHECK(seen == 5);

  auto x4 = completed(parse_preset("affine-a:4:desc"));
  auto s0 = irreducible_words(x4, 5, W({0}));
  CHECK(std::find(s0.begin(), s0.end(), W({0, 1, 2, 3, 4})) != s0.end());
  CHECK(std::find(s0.begin(), s0.end(), W({0, 4, 1, 2, 3})) != s0.end());
}

TEST_CASE("forbidden factors") {
  auto sys = completed(parse_preset("affine-a:4:desc"));
  CHECK_FALSE(first_forbidden_factor(sys, W({0, 1, 2, 3, 4, 0, 1, 2, 3, 4, 0, 1})).has_value());
  CHECK_FALSE(
      first_forbidden_factor(sys, W({0, 4, 1, 2, 3, 4, 0, 4, 1, 2, 3, 4, 0, 1})).has_value());
  auto f = first_forbidden_factor(sys, W({0, 1, 2, 3, 4, 0, 4, 1, 2, 3}));
  REQUIRE(f.has_value());
  auto w = W({0, 1, 2, 3, 4, 0, 4, 1, 2, 3});
  CHECK(test_support::occurs_at(w, sys.rule(f->rule).lhs, f->position));
  for (std::size_t i = 0; i < f->position; ++i) {
    for (auto const& r : sys.rules()) {
      CHECK_FALSE(test_support::occurs_at(w, r.lhs, i));
    }
  }
  CHECK(first_forbidden_factor(sys, W({0, 4, 1, 2, 3, 4, 0, 4, 3})).has_value());
}

TEST_CASE("block words") {
  auto sys = completed(parse_preset("affine-a:4:desc"));
  auto fam = affine_a4_block_families();
  auto rep = check_block_words(sys, fam, 3);
  CHECK(rep.checks.size() == 5 * 4 + 5 * 4 + 5 * 16 + 2);
  std::size_t failures = 0;
  for (auto const& c : rep.checks) {
    CHECK(c.irreducible == test_support::naive_irreducible(c.word, sys.rules()));
    CHECK(c.irreducible == !c.factor.has_value());
    auto it = std::find_if(fam.begin(), fam.end(), [&](auto const& f) { return f.name == c.family; });
    REQUIRE(it != fam.end());
    if (c.irreducible != it->expect_irreducible) {
      ++failures;
      // every disagreement is in the (s4 s0 s4) family with n >= 2
      CHECK(c.family.find("(s4 s0 s4)") != std::string::npos);
      CHECK(c.exponents[0] >= 2);
    }
  }
  CHECK(rep.failures == failures);
  CHECK(failures == 40);

  BlockFamily one{"x", {{W({0, 1, 2, 3, 4}), 0}, {W({0, 1}), -1}}, 1, true};
  auto        r1 = check_block_words(sys, {one}, 2);
  REQUIRE(r1.checks.size() == 3);
  CHECK(r1.checks[2].word == W({0, 1, 2, 3, 4, 0, 1, 2, 3, 4, 0, 1}));
  CHECK(r1.checks[2].irreducible);
}
