#include "coxgs/hypothesis.hpp"

#include <algorithm>

#include "coxgs/errors.hpp"

namespace coxgs {

  word_type m_word(letter_type s, letter_type t, unsigned m) {
    if (m == 0) {
      throw InvalidInput("m_word: m must be positive");
    }
    if (s == t) {
      throw InvalidInput("m_word: the two generators must differ");
    }
    word_type w(m);
    for (unsigned k = 0; k < m; ++k) {
      w[k] = k % 2 == 0 ? s : t;
    }
    return w;
  }

  namespace {
    void check_letters(std::span<letter_type const> w, CoxeterMatrix const& m) {
      for (auto x : w) {
        if (x >= m.size()) {
          throw InvalidInput("letter " + std::to_string(x) + " out of range");
        }
      }
    }
  }  // namespace

  word_type trace_normal_form(std::span<letter_type const> w, CoxeterMatrix const& m) {
    check_letters(w, m);
    std::vector<letter_type> rest(w.begin(), w.end());
    word_type                out;
    out.reserve(rest.size());
    while (!rest.empty()) {
      // a letter can move to the front iff it commutes with everything
      // before it (and so differs from it)
      std::size_t best = rest.size();
      for (std::size_t i = 0; i < rest.size(); ++i) {
        bool free = true;
        for (std::size_t j = 0; j < i && free; ++j) {
          free = rest[j] != rest[i] && m.commute(rest[j], rest[i]);
        }
        if (free && (best == rest.size() || rest[i] < rest[best])) {
          best = i;
        }
      }
      out.push_back(rest[best]);
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return out;
  }

  bool trace_equivalent(std::span<letter_type const> u,
                        std::span<letter_type const> v,
                        CoxeterMatrix const&         m) {
    if (u.size() != v.size()) {
      check_letters(u, m);
      check_letters(v, m);
      return false;
    }
    return trace_normal_form(u, m) == trace_normal_form(v, m);
  }

  std::optional<word_type> trace_prefix_remainder(std::span<letter_type const> p,
                                                  std::span<letter_type const> w,
                                                  CoxeterMatrix const&         m) {
    word_type rest(w.begin(), w.end());
    for (auto x : p) {
      bool found = false;
      for (std::size_t i = 0; i < rest.size(); ++i) {
        if (rest[i] == x) {
          rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
          found = true;
          break;
        }
        if (!m.commute(x, rest[i])) {
          return std::nullopt;
        }
      }
      if (!found) {
        return std::nullopt;
      }
    }
    return rest;
  }

  std::pair<word_type, word_type> expand(PatternInstance const& p, CoxeterMatrix const& m) {
    if (p.chain.empty()) {
      throw InvalidInput("pattern instance needs at least one chain link");
    }
    auto const mm = [&](std::pair<letter_type, letter_type> const& q) {
      unsigned v = m(q.first, q.second);
      if (v == CoxeterMatrix::infinity || q.first == q.second) {
        throw InvalidInput("pattern pair with infinite or undefined m");
      }
      return v;
    };
    word_type  lhs, rhs;
    auto const app = [](word_type& w, word_type const& x) { w.insert(w.end(), x.begin(), x.end()); };
    auto const [s, t] = p.head;
    unsigned const m0 = mm(p.head);
    app(lhs, m_word(s, t, m0 - 1));
    app(rhs, m_word(t, s, m0));
    for (std::size_t i = 0; i < p.chain.size(); ++i) {
      auto const [a, b] = p.chain[i];
      unsigned const mi = mm(p.chain[i]);
      bool const     last = i + 1 == p.chain.size();
      app(lhs, m_word(a, b, last ? mi : mi - 1));
      app(rhs, m_word(a, b, mi - 1));
    }
    return {std::move(lhs), std::move(rhs)};
  }

  std::string_view to_string(MatchMode mode) noexcept {
    return mode == MatchMode::strict ? "strict" : "relaxed";
  }

  MatchMode parse_match_mode(std::string_view text) {
    if (text == "strict") {
      return MatchMode::strict;
    }
    if (text == "relaxed") {
      return MatchMode::relaxed;
    }
    throw InvalidInput("unknown mode '" + std::string(text) + "' (strict|relaxed)");
  }

  std::string_view to_string(MatchReport::Verdict v) noexcept {
    switch (v) {
      case MatchReport::Verdict::initial_relation: return "initial-relation";
      case MatchReport::Verdict::matched: return "matched";
      case MatchReport::Verdict::no_match: return "no-match";
    }
    return "?";
  }

  bool is_initial_relation(Rule const& rule, CoxeterMatrix const& m, Alphabet const& a) {
    check_letters(rule.lhs, m);
    check_letters(rule.rhs, m);
    if (rule.rhs.empty() && rule.lhs.size() == 2 && rule.lhs[0] == rule.lhs[1]) {
      return true;
    }
    for (letter_type s = 0; s < m.size(); ++s) {
      for (letter_type t = 0; t < m.size(); ++t) {
        if (s == t || !m.is_finite(s, t) || a.weight(s) <= a.weight(t)) {
          continue;
        }
        if (rule.lhs.size() != m(s, t)) {
          continue;
        }
        if (trace_equivalent(rule.lhs, m_word(s, t, m(s, t)), m)
            && trace_equivalent(rule.rhs, m_word(t, s, m(s, t)), m)) {
          return true;
        }
      }
    }
    return false;
  }

  namespace {
    using Pair = std::pair<letter_type, letter_type>;

    bool same_unordered(Pair const& x, Pair const& y) {
      return (x.first == y.first && x.second == y.second)
             || (x.first == y.second && x.second == y.first);
    }

    class Search {
     public:
      Search(Rule const& r, CoxeterMatrix const& m, Alphabet const& a, PatternConstraints c)
          : _rule(r), _m(m), _a(a), _c(c) {}

      std::optional<PatternInstance> run() {
        std::size_t const n = _m.size();
        for (letter_type s = 0; s < n; ++s) {
          for (letter_type t = 0; t < n; ++t) {
            if (s == t || !_m.is_finite(s, t) || _a.weight(s) <= _a.weight(t)) {
              continue;
            }
            unsigned const mst = _m(s, t);
            auto rl = trace_prefix_remainder(m_word(s, t, mst - 1), _rule.lhs, _m);
            if (!rl || rl->empty()) {
              continue;
            }
            auto rr = trace_prefix_remainder(m_word(t, s, mst), _rule.rhs, _m);
            if (!rr) {
              continue;
            }
            _inst = PatternInstance{{s, t}, {}, {mst % 2 == 0}};
            if (dfs(*rl, *rr, {s, t}, mst % 2 == 0 ? t : s)) {
              return _inst;
            }
          }
        }
        return std::nullopt;
      }

     private:
      // rest_l, rest_r: what is left of the two sides after the prefix built
      // so far, up to commutations
      bool dfs(word_type const& rest_l, word_type const& rest_r, Pair prev, letter_type need_b) {
        std::size_t const n = _m.size();
        for (letter_type b = 0; b < n; ++b) {
          if (_c.parity && b != need_b) {
            continue;
          }
          for (letter_type a = 0; a < n; ++a) {
            if (a == b || !_m.is_finite(a, b)) {
              continue;
            }
            if (_c.ordered && _a.weight(a) >= _a.weight(b)) {
              continue;
            }
            if (same_unordered({a, b}, prev)) {
              continue;
            }
            unsigned const mab = _m(a, b);
            auto const     part = m_word(a, b, mab - 1);
            auto const     rr   = trace_prefix_remainder(part, rest_r, _m);
            if (!rr) {
              continue;
            }
            _inst.chain.push_back({a, b});
            if (rest_l.size() == mab) {
              auto rl = trace_prefix_remainder(m_word(a, b, mab), rest_l, _m);
              if (rl && rr->empty()) {
                return true;
              }
            } else if (rest_l.size() > mab) {
              auto rl = trace_prefix_remainder(part, rest_l, _m);
              if (rl) {
                _inst.even.push_back(mab % 2 == 0);
                if (dfs(*rl, *rr, {a, b}, mab % 2 == 0 ? b : a)) {
                  return true;
                }
                _inst.even.pop_back();
              }
            }
            _inst.chain.pop_back();
          }
        }
        return false;
      }

      Rule const&          _rule;
      CoxeterMatrix const& _m;
      Alphabet const&      _a;
      PatternConstraints   _c;
      PatternInstance      _inst;
    };
  }  // namespace

  std::optional<PatternInstance> find_pattern(Rule const&          rule,
                                              CoxeterMatrix const& m,
                                              Alphabet const&      alphabet,
                                              PatternConstraints   c) {
    if (alphabet.size() != m.size()) {
      throw InvalidInput("alphabet size does not match the Coxeter matrix");
    }
    check_letters(rule.lhs, m);
    check_letters(rule.rhs, m);
    return Search(rule, m, alphabet, c).run();
  }

  MatchReport matches_hypothesis(Rule const&          rule,
                                 CoxeterMatrix const& m,
                                 Alphabet const&      alphabet,
                                 MatchMode            mode) {
    if (alphabet.size() != m.size()) {
      throw InvalidInput("alphabet size does not match the Coxeter matrix");
    }
    MatchReport rep{rule.id, MatchReport::Verdict::no_match, {}, {}, {}, {}};
    if (is_initial_relation(rule, m, alphabet)) {
      rep.verdict = MatchReport::Verdict::initial_relation;
      return rep;
    }
    auto const c = PatternConstraints::from(mode);
    if (auto p = find_pattern(rule, m, alphabet, c)) {
      rep.verdict  = MatchReport::Verdict::matched;
      rep.instance = std::move(p);
      return rep;
    }
    rep.reason = "no chain satisfies the pattern in " + std::string(to_string(mode)) + " mode";
    std::vector<PatternConstraints> weaker;
    if (c.ordered) {
      weaker.push_back({false, true});
    }
    weaker.push_back({c.ordered, false});
    weaker.push_back({false, false});
    for (auto const& w : weaker) {
      if (auto p = find_pattern(rule, m, alphabet, w)) {
        rep.relaxation       = w;
        rep.relaxed_instance = std::move(p);
        break;
      }
    }
    return rep;
  }

  HypothesisAudit audit_basis(RewriteSystem const& sys, CoxeterMatrix const& m, MatchMode mode) {
    HypothesisAudit out{mode, {}, 0, 0, 0};
    for (auto const& r : sys.canonical_rules()) {
      auto rep = matches_hypothesis(r, m, sys.alphabet(), mode);
      switch (rep.verdict) {
        case MatchReport::Verdict::initial_relation: ++out.initial; break;
        case MatchReport::Verdict::matched: ++out.matched; break;
        case MatchReport::Verdict::no_match: ++out.failed; break;
      }
      out.reports.push_back(std::move(rep));
    }
    return out;
  }

  std::string format_instance(PatternInstance const& p, Alphabet const& a) {
    auto const pair = [&](Pair const& q) { return a.name(q.first) + "," + a.name(q.second); };
    std::string out = "(m-1)(" + pair(p.head) + ")";
    for (std::size_t i = 0; i < p.chain.size(); ++i) {
      out += i + 1 == p.chain.size() ? " m(" : " (m-1)(";
      out += pair(p.chain[i]) + ")";
    }
    return out;
  }

}  // namespace coxgs
