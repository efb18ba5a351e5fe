#include "coxgs/enumerate.hpp"

#include <algorithm>

#include "coxgs/errors.hpp"

namespace coxgs {

  namespace {
    using state_type = FactorIndex::state_type;

    std::uint64_t checked_add(std::uint64_t x, std::uint64_t y) {
      std::uint64_t z;
      if (__builtin_add_overflow(x, y, &z)) {
        throw ResourceError("irreducible word count exceeds 64 bits");
      }
      return z;
    }

    // Letters in ascending order of the ranking.
    std::vector<letter_type> ascending_letters(Alphabet const& a) {
      std::vector<letter_type> out(a.ranking().rbegin(), a.ranking().rend());
      return out;
    }
  }  // namespace

  GrowthSeries growth(RewriteSystem const& sys, std::size_t max_len) {
    FactorIndex const& ix = sys.index();
    std::size_t const  k  = sys.alphabet().size();
    std::size_t const  ns = ix.number_of_states();

    GrowthSeries res;
    res.counts.reserve(max_len + 1);
    std::vector<std::uint64_t> cur(ns, 0), nxt(ns, 0);
    cur[FactorIndex::root] = 1;
    res.counts.push_back(1);
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::fill(nxt.begin(), nxt.end(), 0);
      for (state_type s = 0; s < ns; ++s) {
        if (cur[s] == 0) {
          continue;
        }
        for (std::size_t x = 0; x < k; ++x) {
          state_type t = ix.next(s, static_cast<letter_type>(x));
          if (!ix.accepting(t)) {
            nxt[t] = checked_add(nxt[t], cur[s]);
          }
        }
      }
      std::swap(cur, nxt);
      std::uint64_t c = 0;
      for (auto v : cur) {
        c = checked_add(c, v);
      }
      res.counts.push_back(c);
    }
    res.total = irreducible_total(sys);
    return res;
  }

  std::optional<std::uint64_t> irreducible_total(RewriteSystem const& sys) {
    FactorIndex const& ix = sys.index();
    std::size_t const  k  = sys.alphabet().size();
    std::size_t const  ns = ix.number_of_states();
    if (k == 0) {
      return 1;
    }
    // paths[s] = number of live words readable from s (including the empty
    // one); a reachable live cycle means infinitely many.
    enum : std::uint8_t { white, grey, black };
    std::vector<std::uint8_t>  colour(ns, white);
    std::vector<std::uint64_t> paths(ns, 0);

    struct Frame {
      state_type  s;
      std::size_t next_letter;
    };
    std::vector<Frame> stack{{FactorIndex::root, 0}};
    colour[FactorIndex::root] = grey;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next_letter == k) {
        std::uint64_t p = 1;
        for (std::size_t x = 0; x < k; ++x) {
          state_type t = ix.next(f.s, static_cast<letter_type>(x));
          if (!ix.accepting(t)) {
            p = checked_add(p, paths[t]);
          }
        }
        paths[f.s]  = p;
        colour[f.s] = black;
        stack.pop_back();
        continue;
      }
      state_type t = ix.next(f.s, static_cast<letter_type>(f.next_letter++));
      if (ix.accepting(t)) {
        continue;
      }
      if (colour[t] == grey) {
        return std::nullopt;
      }
      if (colour[t] == white) {
        colour[t] = grey;
        stack.push_back({t, 0});
      }
    }
    return paths[FactorIndex::root];
  }

  void stream_irreducible(RewriteSystem const&                         sys,
                          std::size_t                                  max_len,
                          word_type const&                             prefix,
                          std::function<bool(word_type const&)> const& f) {
    Alphabet const& a = sys.alphabet();
    a.validate(prefix);
    if (prefix.size() > max_len) {
      return;
    }
    FactorIndex const& ix = sys.index();
    state_type         s0 = FactorIndex::root;
    for (auto x : prefix) {
      s0 = ix.next(s0, x);
      if (ix.accepting(s0)) {
        return;
      }
    }
    auto const letters = ascending_letters(a);
    word_type  w       = prefix;
    // depth-first, one pass per target length
    for (std::size_t len = prefix.size(); len <= max_len; ++len) {
      struct Frame {
        state_type  s;
        std::size_t next;
      };
      std::vector<Frame> stack{{s0, 0}};
      w.resize(prefix.size());
      bool any = false;
      while (!stack.empty()) {
        if (w.size() == len) {
          any = true;
          if (!f(w)) {
            return;
          }
          stack.pop_back();
          if (!stack.empty()) {
            w.pop_back();
          }
          continue;
        }
        Frame& fr = stack.back();
        if (fr.next == letters.size()) {
          stack.pop_back();
          if (!stack.empty()) {
            w.pop_back();
          }
          continue;
        }
        letter_type x = letters[fr.next++];
        state_type  t = ix.next(fr.s, x);
        if (ix.accepting(t)) {
          continue;
        }
        w.push_back(x);
        stack.push_back({t, 0});
      }
      if (!any) {
        // no irreducible word of this length, hence none longer
        return;
      }
    }
  }

  std::vector<word_type> irreducible_words(RewriteSystem const& sys,
                                           std::size_t          max_len,
                                           word_type const&     prefix) {
    std::vector<word_type> out;
    stream_irreducible(sys, max_len, prefix, [&](word_type const& w) {
      out.push_back(w);
      return true;
    });
    return out;
  }

  std::optional<ForbiddenFactor> first_forbidden_factor(RewriteSystem const&         sys,
                                                        std::span<letter_type const> w) {
    sys.alphabet().validate(w);
    auto occ = sys.index().all_occurrences(w);
    if (occ.empty()) {
      return std::nullopt;
    }
    return ForbiddenFactor{occ.front().first, occ.front().second};
  }

  BlockReport check_block_words(RewriteSystem const&            sys,
                                std::vector<BlockFamily> const& families,
                                std::size_t                     max_exponent) {
    BlockReport rep;
    for (auto const& fam : families) {
      for (auto const& part : fam.parts) {
        if (part.exponent >= static_cast<int>(fam.variables)) {
          throw InvalidInput("block family " + fam.name + " uses an undeclared exponent");
        }
      }
      std::vector<std::size_t> e(fam.variables, 0);
      while (true) {
        word_type w;
        for (auto const& part : fam.parts) {
          std::size_t times = part.exponent < 0 ? 1 : e[static_cast<std::size_t>(part.exponent)];
          for (std::size_t t = 0; t < times; ++t) {
            w.insert(w.end(), part.word.begin(), part.word.end());
          }
        }
        auto factor = first_forbidden_factor(sys, w);
        bool irr    = !factor.has_value();
        if (irr != fam.expect_irreducible) {
          ++rep.failures;
        }
        rep.checks.push_back(BlockCheck{fam.name, e, std::move(w), irr, factor});
        // next exponent vector
        std::size_t i = 0;
        while (i < e.size() && e[i] == max_exponent) {
          e[i++] = 0;
        }
        if (i == e.size()) {
          break;
        }
        ++e[i];
      }
    }
    return rep;
  }

  std::vector<BlockFamily> affine_a4_block_families() {
    word_type const A{0, 1, 2, 3, 4}, B{0, 4, 1, 2, 3}, C{1, 2, 3, 4, 0}, D{4, 0, 4};
    std::vector<BlockFamily> out;
    auto const tails = [](word_type const& base) {
      std::vector<word_type> t;
      for (std::size_t k = 0; k < base.size(); ++k) {
        t.emplace_back(base.begin(), base.begin() + static_cast<std::ptrdiff_t>(k));
      }
      return t;
    };
    std::vector<std::string> const tail_name{"", "s0", "s0 s1", "s0 s1 s2", "s0 s1 s2 s3"};
    {
      auto t = tails(A);
      for (std::size_t k = 0; k < t.size(); ++k) {
        out.push_back({"(s0 s1 s2 s3 s4)^p" + std::string(k ? " " : "") + tail_name[k],
                       {{A, 0}, {t[k], -1}}, 1, true});
      }
    }
    {
      auto t = tails(B);
      std::vector<std::string> const nm{"", "s0", "s0 s4", "s0 s4 s1", "s0 s4 s1 s2"};
      for (std::size_t k = 0; k < t.size(); ++k) {
        out.push_back({"(s0 s4 s1 s2 s3)^n" + std::string(k ? " " : "") + nm[k],
                       {{B, 0}, {t[k], -1}}, 1, true});
      }
    }
    {
      std::vector<word_type> t{{}, {1}, {1, 2}, {1, 2, 3}, {1, 2, 3, 4}};
      std::vector<std::string> const nm{"", "s1", "s1 s2", "s1 s2 s3", "s1 s2 s3 s4"};
      for (std::size_t k = 0; k < t.size(); ++k) {
        out.push_back({"(s0 s4 s1 s2 s3)^n (s4 s0 s4) (s1 s2 s3 s4 s0)^p"
                           + std::string(k ? " " : "") + nm[k],
                       {{B, 0}, {D, -1}, {C, 1}, {t[k], -1}}, 2, true});
      }
    }
    out.push_back({"s0 s4 s1 s2 s3 s4 s0 s4 s3", {{{0, 4, 1, 2, 3, 4, 0, 4, 3}, -1}}, 0, false});
    out.push_back({"(s0 s1 s2 s3 s4)(s0 s4 s1 s2 s3)", {{A, -1}, {B, -1}}, 0, false});
    return out;
  }

}  // namespace coxgs
