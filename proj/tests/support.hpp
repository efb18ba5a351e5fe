// Independent reference implementations used as test oracles. Nothing here
// calls into the library except for types and word parsing.
#ifndef COXGS_TESTS_SUPPORT_HPP_
#define COXGS_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coxgs/coxeter.hpp"
#include "coxgs/rewrite.hpp"
#include "coxgs/words.hpp"

namespace test_support {

  using coxgs::letter_type;
  using coxgs::word_type;

  std::uint64_t seed();

  inline word_type W(std::initializer_list<int> xs) {
    word_type w;
    for (int x : xs) {
      w.push_back(static_cast<letter_type>(x));
    }
    return w;
  }

  inline word_type random_word(std::mt19937_64& rng, std::size_t k, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len), letter(0, k - 1);
    word_type                                  w(len(rng));
    for (auto& x : w) {
      x = static_cast<letter_type>(letter(rng));
    }
    return w;
  }

  // Position of the first occurrence of p in w at or after from, by
  // direct comparison.
  inline bool occurs_at(word_type const& w, word_type const& p, std::size_t i) {
    if (i + p.size() > w.size()) {
      return false;
    }
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (w[i + j] != p[j]) {
        return false;
      }
    }
    return true;
  }

  inline bool naive_contains(word_type const& w, word_type const& p) {
    for (std::size_t i = 0; i + p.size() <= w.size(); ++i) {
      if (occurs_at(w, p, i)) {
        return true;
      }
    }
    return false;
  }

  inline bool naive_irreducible(word_type const& w, std::vector<coxgs::Rule> const& rules) {
    return std::none_of(rules.begin(), rules.end(),
                        [&](auto const& r) { return naive_contains(w, r.lhs); });
  }

  // deglex with "rank" giving a weight per letter (greater = larger)
  inline bool naive_deglex_less(word_type const& u,
                                word_type const& v,
                                std::vector<std::size_t> const& weight) {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i] != v[i]) {
        return weight[u[i]] < weight[v[i]];
      }
    }
    return false;
  }

  // All words of length exactly n over k letters, lexicographic by index.
  inline std::vector<word_type> all_words(std::size_t k, std::size_t n) {
    std::vector<word_type> out{{}};
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<word_type> next;
      for (auto const& w : out) {
        for (std::size_t x = 0; x < k; ++x) {
          auto v = w;
          v.push_back(static_cast<letter_type>(x));
          next.push_back(std::move(v));
        }
      }
      out = std::move(next);
    }
    return out;
  }

  // Generate-and-filter count of irreducible words per length.
  inline std::vector<std::uint64_t> naive_growth(std::vector<coxgs::Rule> const& rules,
                                                 std::size_t k,
                                                 std::size_t max_len) {
    std::vector<std::uint64_t> c;
    for (std::size_t n = 0; n <= max_len; ++n) {
      std::uint64_t cnt = 0;
      for (auto const& w : all_words(k, n)) {
        cnt += naive_irreducible(w, rules);
      }
      c.push_back(cnt);
    }
    return c;
  }

  // Exhaustive rewriting: the set of words reachable from w by any rule at
  // any position. Normal form = the unique irreducible reachable word when
  // the system is confluent.
  inline std::set<word_type> irreducible_descendants(word_type const&                w,
                                                     std::vector<coxgs::Rule> const& rules) {
    std::set<word_type> seen{w}, out;
    std::vector<word_type> todo{w};
    while (!todo.empty()) {
      auto u = todo.back();
      todo.pop_back();
      bool any = false;
      for (auto const& r : rules) {
        for (std::size_t i = 0; i + r.lhs.size() <= u.size(); ++i) {
          if (!occurs_at(u, r.lhs, i)) {
            continue;
          }
          any = true;
          word_type v(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(i));
          v.insert(v.end(), r.rhs.begin(), r.rhs.end());
          v.insert(v.end(), u.begin() + static_cast<std::ptrdiff_t>(i + r.lhs.size()), u.end());
          if (seen.insert(v).second) {
            todo.push_back(std::move(v));
          }
        }
      }
      if (!any) {
        out.insert(u);
      }
    }
    return out;
  }

  // Trace equivalence by projection: u ~ v iff they have the same letter
  // counts and, for every dependent pair {a, b} (m_ab != 2, a != b), the
  // projections onto {a, b} agree.
  inline bool projection_equivalent(word_type const&            u,
                                    word_type const&            v,
                                    coxgs::CoxeterMatrix const& m) {
    if (u.size() != v.size()) {
      return false;
    }
    std::size_t const n = m.size();
    for (letter_type a = 0; a < n; ++a) {
      for (letter_type b = a; b < n; ++b) {
        if (a != b && m(a, b) == 2) {
          continue;
        }
        word_type pu, pv;
        for (auto x : u) {
          if (x == a || x == b) {
            pu.push_back(x);
          }
        }
        for (auto x : v) {
          if (x == a || x == b) {
            pv.push_back(x);
          }
        }
        if (pu != pv) {
          return false;
        }
      }
    }
    return true;
  }

  // Reference group models, written out independently of the library:
  // elements as images of 1..k (signed for B, D), composed left to right.
  struct RefModel {
    char        family;  // 'A', 'B', 'D', 'X' (affine)
    std::size_t k;       // window length

    std::vector<long> identity() const {
      std::vector<long> w(k);
      for (std::size_t i = 0; i < k; ++i) {
        w[i] = static_cast<long>(i) + 1;
      }
      return w;
    }

    // value of w at an arbitrary integer / signed position
    long value(std::vector<long> const& w, long i) const {
      long const K = static_cast<long>(k);
      if (family == 'X') {
        long q = (i - 1) >= 0 ? (i - 1) / K : -((K - i) / K);
        long r = i - q * K;  // 1..K
        return w[static_cast<std::size_t>(r - 1)] + q * K;
      }
      if (i < 0) {
        return -w[static_cast<std::size_t>(-i - 1)];
      }
      return w[static_cast<std::size_t>(i - 1)];
    }

    // the generator as a map on positions
    long gen(std::size_t s, long i) const {
      long const K = static_cast<long>(k);
      switch (family) {
        case 'A':
          break;
        case 'B':
          if (s + 1 == k) {
            return (i == K || i == -K) ? -i : i;
          }
          break;
        case 'D':
          if (s + 1 == k) {
            if (i == K - 1 || i == -(K - 1)) {
              return i > 0 ? -K : K;
            }
            if (i == K || i == -K) {
              return i > 0 ? -(K - 1) : (K - 1);
            }
            return i;
          }
          break;
        case 'X': {
          if (s == 0) {
            long r = ((i % K) + K) % K;  // 0 means position K
            if (r == 0) {
              return i + 1;
            }
            if (r == 1) {
              return i - 1;
            }
            return i;
          }
          long a = static_cast<long>(s), r = ((i - 1) % K + K) % K + 1;
          long base = i - r;
          if (r == a) {
            return base + a + 1;
          }
          if (r == a + 1) {
            return base + a;
          }
          return i;
        }
      }
      long a = static_cast<long>(s) + 1;
      long ai = i < 0 ? -i : i, sign = i < 0 ? -1 : 1;
      if (ai == a) {
        return sign * (a + 1);
      }
      if (ai == a + 1) {
        return sign * a;
      }
      return i;
    }

    // (w * s)(i) = w(s(i))
    std::vector<long> times(std::vector<long> const& w, std::size_t s) const {
      std::vector<long> out(k);
      for (std::size_t i = 0; i < k; ++i) {
        out[i] = value(w, gen(s, static_cast<long>(i) + 1));
      }
      return out;
    }

    std::vector<long> eval(word_type const& word) const {
      auto w = identity();
      for (auto x : word) {
        w = times(w, x);
      }
      return w;
    }
  };

  inline RefModel ref_model(coxgs::Preset const& p) {
    switch (p.family) {
      case coxgs::Family::A: return {'A', p.size + 1};
      case coxgs::Family::B: return {'B', p.size};
      case coxgs::Family::D: return {'D', p.size};
      case coxgs::Family::affine_A: return {'X', p.size + 1};
    }
    return {'A', 1};
  }

}  // namespace test_support

#endif  // COXGS_TESTS_SUPPORT_HPP_
