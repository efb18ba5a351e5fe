#ifndef COXGS_REWRITE_HPP_
#define COXGS_REWRITE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "coxgs/factor_index.hpp"
#include "coxgs/words.hpp"

namespace coxgs {

  using rule_id = std::uint32_t;

  // The binomial lhs - rhs, oriented so that lhs is the deglex-leading word.
  struct Rule {
    rule_id   id;
    word_type lhs;
    word_type rhs;

    bool operator==(Rule const&) const = default;
  };

  // Checks lhs nonempty and lhs > rhs in deglex.
  Rule make_rule(rule_id id, word_type lhs, word_type rhs, Alphabet const& a);

  // Orients u = v; throws InvalidInput if u == v.
  Rule oriented_rule(rule_id id, word_type u, word_type v, Alphabet const& a);

  // Canonical order used for serialization and set comparison: deglex of
  // lhs, then rhs under deglex.
  bool canonical_less(Rule const& x, Rule const& y, Alphabet const& a);

  enum class Strategy : std::uint8_t {
    leftmost,   // leftmost start, then lowest rule id
    rightmost,  // rightmost start, then lowest rule id
  };

  struct Rewrite {
    word_type   result;
    rule_id     rule;
    std::size_t position;
  };

  class RewriteSystem {
   public:
    RewriteSystem() = default;
    explicit RewriteSystem(Alphabet alphabet);
    RewriteSystem(Alphabet alphabet, std::vector<Rule> rules);

    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }

    // In insertion order.
    std::vector<Rule> const& rules() const noexcept {
      return _rules;
    }

    std::size_t size() const noexcept {
      return _rules.size();
    }

    bool        contains(rule_id id) const;
    Rule const& rule(rule_id id) const;
    rule_id     next_id() const noexcept {
      return _next_id;
    }

    void add(Rule r);
    void remove(rule_id id);
    void replace_rhs(rule_id id, word_type rhs);

    // Rules sorted by canonical_less.
    std::vector<Rule> canonical_rules() const;

    // True when no lhs occurs as a factor of another lhs (and no lhs is
    // repeated).
    bool left_sides_factor_free() const noexcept {
      return _factor_free;
    }

    FactorIndex const& index() const noexcept {
      return _index;
    }

    std::optional<Rewrite> reduce_once(std::span<letter_type const> w,
                                       Strategy s = Strategy::leftmost) const;

    // Repeated reduce_once until irreducible. steps, if given, receives the
    // number of rewrites performed.
    word_type normal_form(std::span<letter_type const> w,
                          Strategy     s     = Strategy::leftmost,
                          std::size_t* steps = nullptr) const;

    bool is_irreducible(std::span<letter_type const> w) const;

   private:
    void rebuild();

    Alphabet                             _alphabet;
    std::vector<Rule>                    _rules;
    std::unordered_map<rule_id, std::size_t> _position;
    FactorIndex                          _index;
    rule_id                              _next_id     = 0;
    bool                                 _factor_free = true;
  };

  bool same_rules(RewriteSystem const& x, RewriteSystem const& y);

}  // namespace coxgs

#endif  // COXGS_REWRITE_HPP_
