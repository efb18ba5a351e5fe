#ifndef COXGS_SERIALIZE_HPP_
#define COXGS_SERIALIZE_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coxgs/rewrite.hpp"
#include "coxgs/words.hpp"

namespace coxgs {

  // Basis files are JSON: generator names, the ranking (greatest first) as
  // letter indices, and the rules as [lhs, rhs] index arrays in canonical
  // order, one rule per line. Rule ids are not stored; loading numbers the
  // rules 0, 1, ... in file order.
  std::string   basis_to_string(RewriteSystem const& sys);
  RewriteSystem basis_from_string(std::string_view text);
  void          save_basis(RewriteSystem const& sys, std::string const& path);
  RewriteSystem load_basis(std::string const& path);

  // Plain-text presentations:
  //
  //   # comment
  //   generators: s0 s1 s2
  //   ranking: s0 < s1 < s2        (or s2 > s1 > s0)
  //   s1 s0 s1 = s0 s1 s0
  //   s0 s0 = 1
  //
  // Relations are oriented by deglex on load.
  struct PresentationText {
    Alphabet                                 alphabet;
    std::vector<std::pair<word_type, word_type>> relations;
    std::vector<std::size_t>                 relation_lines;
  };

  PresentationText parse_presentation(std::string_view text);
  PresentationText load_presentation(std::string const& path);
  std::string      presentation_to_string(RewriteSystem const& sys);

  // Rules of a presentation, oriented, with ids 0, 1, ... in file order.
  std::vector<Rule> oriented_relations(PresentationText const& p);

  std::string read_file(std::string const& path);

}  // namespace coxgs

#endif  // COXGS_SERIALIZE_HPP_
