#ifndef COXGS_COMPLETION_HPP_
#define COXGS_COMPLETION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "coxgs/rewrite.hpp"
#include "coxgs/words.hpp"

namespace coxgs {

  // The composition (f, g)_w of two rules over an ambiguity of their left
  // sides, and what is left of it after reduction.
  struct CompositionResidue {
    rule_id   f;
    rule_id   g;
    Ambiguity ambiguity;
    // intersection: (f.rhs·b, a·g.rhs); inclusion: (f.rhs, a·g.rhs·b)
    std::pair<word_type, word_type> raw;
    // Absent when both sides have the same normal form.
    std::optional<Rule> residue;
  };

  CompositionResidue compose(Rule const&          f,
                             Rule const&          g,
                             Ambiguity const&     amb,
                             RewriteSystem const& sys);

  // Every nontrivial composition among the rules of sys, both orders and
  // self-pairs included. Empty iff sys is a Groebner-Shirshov basis.
  std::vector<CompositionResidue> verify_closed(RewriteSystem const& sys);

  struct CompletionCaps {
    std::size_t max_word_len = 32;
    std::size_t max_rules    = 10'000;
    std::size_t max_steps    = 10'000'000;
  };

  enum class CompletionStatus : std::uint8_t {
    closed,
    length_capped,
    rule_capped,
    step_capped,
  };

  std::string_view to_string(CompletionStatus s) noexcept;

  struct CompletionStats {
    std::size_t compositions_examined = 0;
    std::size_t nontrivial            = 0;
    std::size_t rules_added           = 0;
    std::size_t rules_removed         = 0;
    std::size_t residues_discarded    = 0;
  };

  // One record per rule ever inserted.
  struct DerivationRecord {
    enum class Origin : std::uint8_t { initial, composition, interreduction };

    rule_id   id;
    word_type lhs;
    word_type rhs;
    Origin    origin;
    // composition: the pair (f, g); interreduction: (replaced rule, rule
    // whose insertion displaced it); initial: (input index, input index).
    rule_id         parent_f = 0;
    rule_id         parent_g = 0;
    Ambiguity::Kind kind     = Ambiguity::Kind::intersection;
    word_type       witness;
  };

  struct CompletionResult {
    RewriteSystem                 system;
    CompletionStatus              status;
    std::size_t                   cap = 0;  // the cap that fired, if any
    CompletionStats               stats;
    std::vector<DerivationRecord> log;
  };

  // Buchberger-Shirshov completion. Pending compositions are processed in
  // deglex order of their witness word, then in creation order; every new
  // rule is inserted into an interreduced system. Residues whose left side
  // is longer than caps.max_word_len are dropped, and the result is then
  // reported as length_capped even if the queue empties.
  CompletionResult complete(std::vector<Rule> const& initial,
                            Alphabet const&          alphabet,
                            CompletionCaps const&    caps = {});

  // An equivalent rule set in which no left side contains another as a
  // factor and every right side is irreducible. Rules are returned in
  // canonical order with ids 0, 1, ...; relations collapsing to 1 = 1 are
  // dropped.
  std::vector<Rule> interreduce(std::vector<Rule> const& rules,
                                Alphabet const&          alphabet);

  // Overlap data for composing f with the composition of g and h.
  struct Chain {
    std::size_t first_overlap;   // |v1|: suffix of f.lhs = prefix of g.lhs
    std::size_t second_overlap;  // |v2|: suffix of g.lhs = prefix of h.lhs
  };

  // Overlap pairs for which f.lhs = a1·v1, g.lhs = v1·b1 = a2·v2,
  // h.lhs = v2·b2 and a2 = v1·ā2.
  std::vector<Chain> admissible_chains(Rule const& f, Rule const& g, Rule const& h);

  // With <f;g> = a1·g.rhs - f.rhs·b1 and <g;h> = a2·h.rhs - g.rhs·b2,
  // decides whether <f; a2·h.rhs - g.rhs·b2> = a1·g.rhs·b2 - f.rhs·ā2·h.rhs
  // reduces to zero in sys. Throws PreconditionError when the overlaps do
  // not exist, a2 does not start with v1, or <f;g> is not trivial in sys.
  bool chained_composition_check(Rule const&          f,
                                 Rule const&          g,
                                 Rule const&          h,
                                 Chain                chain,
                                 RewriteSystem const& sys);

}  // namespace coxgs

#endif  // COXGS_COMPLETION_HPP_
