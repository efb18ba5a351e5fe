#ifndef COXGS_ENUMERATE_HPP_
#define COXGS_ENUMERATE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxgs/rewrite.hpp"
#include "coxgs/words.hpp"

namespace coxgs {

  struct GrowthSeries {
    std::vector<std::uint64_t>   counts;  // c_0, ..., c_L
    std::optional<std::uint64_t> total;   // set iff the language is finite

    bool operator==(GrowthSeries const&) const = default;
  };

  // Number of words of each length <= max_len with no rule lhs as a factor,
  // counted on the factor-avoiding automaton. Throws ResourceError on
  // uint64 overflow.
  GrowthSeries growth(RewriteSystem const& sys, std::size_t max_len);

  // Number of irreducible words of any length, if finite.
  std::optional<std::uint64_t> irreducible_total(RewriteSystem const& sys);

  // Calls f on every irreducible word of length <= max_len that starts with
  // prefix, in deglex order (shorter first, then by ranking, least letter
  // first). Stops early when f returns false.
  void stream_irreducible(RewriteSystem const&                    sys,
                          std::size_t                             max_len,
                          word_type const&                        prefix,
                          std::function<bool(word_type const&)> const& f);

  std::vector<word_type> irreducible_words(RewriteSystem const& sys,
                                           std::size_t          max_len,
                                           word_type const&     prefix = {});

  struct ForbiddenFactor {
    std::size_t position;
    rule_id     rule;
  };

  // Leftmost occurrence of a rule lhs in w, lowest rule id on ties.
  std::optional<ForbiddenFactor> first_forbidden_factor(RewriteSystem const&         sys,
                                                        std::span<letter_type const> w);

  // prefix · (block)^e · ... with one exponent variable per repeated block.
  struct BlockPart {
    word_type word;
    int       exponent = -1;  // index of the exponent variable, -1 for once
  };

  struct BlockFamily {
    std::string            name;
    std::vector<BlockPart> parts;
    std::size_t            variables = 0;
    // expected irreducibility for every exponent choice
    bool expect_irreducible = true;
  };

  struct BlockCheck {
    std::string                     family;
    std::vector<std::size_t>        exponents;
    word_type                       word;
    bool                            irreducible;
    std::optional<ForbiddenFactor>  factor;
  };

  struct BlockReport {
    std::vector<BlockCheck> checks;
    std::size_t             failures = 0;  // checks disagreeing with expectation
  };

  // Expands each family for all exponents 0..max_exponent.
  BlockReport check_block_words(RewriteSystem const&            sys,
                                std::vector<BlockFamily> const& families,
                                std::size_t                     max_exponent);

  // Block families of minimal coset representatives for affine A_4
  // (letters s0..s4), expected irreducible, plus two words expected
  // reducible.
  std::vector<BlockFamily> affine_a4_block_families();

}  // namespace coxgs

#endif  // COXGS_ENUMERATE_HPP_
