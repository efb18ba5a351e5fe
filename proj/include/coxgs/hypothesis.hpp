#ifndef COXGS_HYPOTHESIS_HPP_
#define COXGS_HYPOTHESIS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coxgs/coxeter.hpp"
#include "coxgs/rewrite.hpp"
#include "coxgs/words.hpp"

namespace coxgs {

  // s s' s s' ... with m letters.
  word_type m_word(letter_type s, letter_type t, unsigned m);

  // Canonical representative of the trace of w, where s and s' commute iff
  // m_{ss'} = 2: the lexicographically least word (by letter index) in the
  // commutation class.
  word_type trace_normal_form(std::span<letter_type const> w, CoxeterMatrix const& m);

  bool trace_equivalent(std::span<letter_type const> u,
                        std::span<letter_type const> v,
                        CoxeterMatrix const&         m);

  // If p is a prefix of w up to commutations, the remaining letters of w.
  std::optional<word_type> trace_prefix_remainder(std::span<letter_type const> p,
                                                  std::span<letter_type const> w,
                                                  CoxeterMatrix const&         m);

  // (m-1)(s,s') (m-1)(a_1,b_1) ... (m-1)(a_k,b_k) m(a_{k+1},b_{k+1})
  //   = m(s',s) (m-1)(a_1,b_1) ... (m-1)(a_k,b_k) (m-1)(a_{k+1},b_{k+1})
  struct PatternInstance {
    std::pair<letter_type, letter_type>              head;
    std::vector<std::pair<letter_type, letter_type>> chain;  // last is the m(.,.) link
    // Per link, whether m of the preceding pair is even (the head first).
    std::vector<bool> even;

    bool operator==(PatternInstance const&) const = default;
  };

  std::pair<word_type, word_type> expand(PatternInstance const& p, CoxeterMatrix const& m);

  enum class MatchMode : std::uint8_t {
    strict,   // chain pairs have first < second
    relaxed,  // first component free
  };

  std::string_view to_string(MatchMode mode) noexcept;
  MatchMode        parse_match_mode(std::string_view text);

  struct PatternConstraints {
    bool ordered = true;  // a_i < b_i
    bool parity  = true;  // b_{i+1} fixed by the parity of the previous pair

    static PatternConstraints from(MatchMode mode) noexcept {
      return {mode == MatchMode::strict, true};
    }
  };

  struct MatchReport {
    enum class Verdict : std::uint8_t { initial_relation, matched, no_match };

    rule_id                        rule;
    Verdict                        verdict;
    std::optional<PatternInstance> instance;  // set when matched
    std::string                    reason;    // set when no_match
    // For no_match: the weakest constraint set under which the rule
    // matches, if any.
    std::optional<PatternConstraints> relaxation;
    std::optional<PatternInstance>    relaxed_instance;
  };

  std::string_view to_string(MatchReport::Verdict v) noexcept;

  // Searches every chain whose left side has the length of rule.lhs.
  std::optional<PatternInstance> find_pattern(Rule const&          rule,
                                              CoxeterMatrix const& m,
                                              Alphabet const&      alphabet,
                                              PatternConstraints   c);

  // Trace-equivalent to s s = 1 or m(s,s') = m(s',s) with s > s'.
  bool is_initial_relation(Rule const& rule, CoxeterMatrix const& m, Alphabet const& alphabet);

  MatchReport matches_hypothesis(Rule const&          rule,
                                 CoxeterMatrix const& m,
                                 Alphabet const&      alphabet,
                                 MatchMode            mode = MatchMode::strict);

  struct HypothesisAudit {
    MatchMode                mode;
    std::vector<MatchReport> reports;  // canonical rule order
    std::size_t              initial = 0;
    std::size_t              matched = 0;
    std::size_t              failed  = 0;
  };

  HypothesisAudit audit_basis(RewriteSystem const& sys,
                              CoxeterMatrix const& m,
                              MatchMode            mode = MatchMode::strict);

  std::string format_instance(PatternInstance const& p, Alphabet const& a);

}  // namespace coxgs

#endif  // COXGS_HYPOTHESIS_HPP_
