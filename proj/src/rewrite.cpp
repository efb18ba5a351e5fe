#include "coxgs/rewrite.hpp"

#include <algorithm>
#include <string>

#include "coxgs/errors.hpp"

namespace coxgs {

  Rule make_rule(rule_id id, word_type lhs, word_type rhs, Alphabet const& a) {
    a.validate(lhs);
    a.validate(rhs);
    if (lhs.empty()) {
      throw InvalidInput("rule left side must be nonempty");
    }
    if (deglex_compare_unchecked(lhs, rhs, a) != std::strong_ordering::greater) {
      throw InvalidInput("rule " + to_string(lhs, a) + " -> " + to_string(rhs, a)
                         + " is not oriented (left side must be deglex-greater)");
    }
    return Rule{id, std::move(lhs), std::move(rhs)};
  }

  Rule oriented_rule(rule_id id, word_type u, word_type v, Alphabet const& a) {
    a.validate(u);
    a.validate(v);
    auto c = deglex_compare_unchecked(u, v, a);
    if (c == std::strong_ordering::equal) {
      throw InvalidInput("relation " + to_string(u, a) + " = " + to_string(v, a)
                         + " is trivial");
    }
    if (c == std::strong_ordering::less) {
      std::swap(u, v);
    }
    return Rule{id, std::move(u), std::move(v)};
  }

  bool canonical_less(Rule const& x, Rule const& y, Alphabet const& a) {
    auto c = deglex_compare_unchecked(x.lhs, y.lhs, a);
    if (c != std::strong_ordering::equal) {
      return c == std::strong_ordering::less;
    }
    return deglex_compare_unchecked(x.rhs, y.rhs, a) == std::strong_ordering::less;
  }

  RewriteSystem::RewriteSystem(Alphabet alphabet)
      : _alphabet(std::move(alphabet)), _index(_alphabet.size()) {
    rebuild();
  }

  RewriteSystem::RewriteSystem(Alphabet alphabet, std::vector<Rule> rules)
      : _alphabet(std::move(alphabet)), _index(_alphabet.size()) {
    for (auto& r : rules) {
      auto checked = make_rule(r.id, std::move(r.lhs), std::move(r.rhs), _alphabet);
      if (_position.contains(checked.id)) {
        throw InvalidInput("duplicate rule id " + std::to_string(checked.id));
      }
      _position.emplace(checked.id, _rules.size());
      _next_id = std::max(_next_id, checked.id + 1);
      _rules.push_back(std::move(checked));
    }
    rebuild();
  }

  bool RewriteSystem::contains(rule_id id) const {
    return _position.contains(id);
  }

  Rule const& RewriteSystem::rule(rule_id id) const {
    auto it = _position.find(id);
    if (it == _position.end()) {
      throw InvalidInput("no rule with id " + std::to_string(id));
    }
    return _rules[it->second];
  }

  void RewriteSystem::add(Rule r) {
    auto checked = make_rule(r.id, std::move(r.lhs), std::move(r.rhs), _alphabet);
    if (_position.contains(checked.id)) {
      throw InvalidInput("duplicate rule id " + std::to_string(checked.id));
    }
    _position.emplace(checked.id, _rules.size());
    _next_id = std::max(_next_id, checked.id + 1);
    _rules.push_back(std::move(checked));
    rebuild();
  }

  void RewriteSystem::remove(rule_id id) {
    auto it = _position.find(id);
    if (it == _position.end()) {
      throw InvalidInput("no rule with id " + std::to_string(id));
    }
    _rules.erase(_rules.begin() + static_cast<std::ptrdiff_t>(it->second));
    _position.clear();
    for (std::size_t i = 0; i < _rules.size(); ++i) {
      _position.emplace(_rules[i].id, i);
    }
    rebuild();
  }

  void RewriteSystem::replace_rhs(rule_id id, word_type rhs) {
    auto it = _position.find(id);
    if (it == _position.end()) {
      throw InvalidInput("no rule with id " + std::to_string(id));
    }
    Rule& r = _rules[it->second];
    r       = make_rule(id, std::move(r.lhs), std::move(rhs), _alphabet);
    // left sides unchanged, the index stays valid
  }

  std::vector<Rule> RewriteSystem::canonical_rules() const {
    std::vector<Rule> out = _rules;
    std::sort(out.begin(), out.end(), [this](Rule const& x, Rule const& y) {
      return canonical_less(x, y, _alphabet);
    });
    return out;
  }

  void RewriteSystem::rebuild() {
    _index.clear(_alphabet.size());
    for (auto const& r : _rules) {
      _index.add(r.lhs, r.id);
    }
    _index.build();
    _factor_free = true;
    for (auto const& r : _rules) {
      if (_index.all_occurrences(r.lhs).size() != 1) {
        _factor_free = false;
        break;
      }
    }
  }

  std::optional<Rewrite> RewriteSystem::reduce_once(std::span<letter_type const> w,
                                                    Strategy s) const {
    _alphabet.validate(w);
    bool        found      = false;
    std::size_t best_start = 0;
    rule_id     best_rule  = 0;
    auto        state      = FactorIndex::root;
    std::size_t const maxlen = _index.max_pattern_length();
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (s == Strategy::leftmost && found && i + 1 > maxlen
          && i + 1 - maxlen > best_start) {
        break;
      }
      state = _index.next(state, w[i]);
      for (auto const& m : _index.matches(state)) {
        std::size_t start = i + 1 - m.length;
        bool        better;
        if (!found) {
          better = true;
        } else if (start != best_start) {
          better = (s == Strategy::leftmost) ? start < best_start
                                             : start > best_start;
        } else {
          better = m.key < best_rule;
        }
        if (better) {
          found      = true;
          best_start = start;
          best_rule  = m.key;
        }
      }
    }
    if (!found) {
      return std::nullopt;
    }
    Rule const& r = rule(best_rule);
    Rewrite     out{{}, best_rule, best_start};
    out.result.reserve(w.size() - r.lhs.size() + r.rhs.size());
    out.result.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(best_start));
    out.result.insert(out.result.end(), r.rhs.begin(), r.rhs.end());
    out.result.insert(out.result.end(),
                      w.begin() + static_cast<std::ptrdiff_t>(best_start + r.lhs.size()),
                      w.end());
    return out;
  }

  word_type RewriteSystem::normal_form(std::span<letter_type const> w,
                                       Strategy                     s,
                                       std::size_t*                 steps) const {
    _alphabet.validate(w);
    std::size_t count = 0;
    if (s == Strategy::leftmost && _factor_free) {
      // With factor-free left sides, the first match to complete while
      // scanning is also the one with the leftmost start, so a single pass
      // with a stack of automaton states replays the leftmost strategy.
      word_type                            out;
      std::vector<FactorIndex::state_type> states{FactorIndex::root};
      word_type                            pending(w.rbegin(), w.rend());
      out.reserve(w.size());
      while (!pending.empty()) {
        letter_type x = pending.back();
        pending.pop_back();
        auto state = _index.next(states.back(), x);
        out.push_back(x);
        states.push_back(state);
        auto m = _index.matches(state);
        if (!m.empty()) {
          Rule const& r = rule(m.front().key);
          out.resize(out.size() - r.lhs.size());
          states.resize(states.size() - r.lhs.size());
          pending.insert(pending.end(), r.rhs.rbegin(), r.rhs.rend());
          ++count;
        }
      }
      if (steps != nullptr) {
        *steps = count;
      }
      return out;
    }
    word_type current(w.begin(), w.end());
    while (auto step = reduce_once(current, s)) {
      current = std::move(step->result);
      ++count;
    }
    if (steps != nullptr) {
      *steps = count;
    }
    return current;
  }

  bool RewriteSystem::is_irreducible(std::span<letter_type const> w) const {
    _alphabet.validate(w);
    auto state = FactorIndex::root;
    for (auto x : w) {
      state = _index.next(state, x);
      if (_index.accepting(state)) {
        return false;
      }
    }
    return true;
  }

  bool same_rules(RewriteSystem const& x, RewriteSystem const& y) {
    if (!(x.alphabet() == y.alphabet()) || x.size() != y.size()) {
      return false;
    }
    auto a = x.canonical_rules();
    auto b = y.canonical_rules();
    return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                      [](Rule const& p, Rule const& q) {
                        return p.lhs == q.lhs && p.rhs == q.rhs;
                      });
  }

}  // namespace coxgs
