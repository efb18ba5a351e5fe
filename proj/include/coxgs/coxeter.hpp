#ifndef COXGS_COXETER_HPP_
#define COXGS_COXETER_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "coxgs/completion.hpp"
#include "coxgs/rewrite.hpp"
#include "coxgs/words.hpp"

namespace coxgs {

  // Symmetric matrix m_{ss'} with 1 on the diagonal and entries >= 2 (or
  // infinity) elsewhere.
  class CoxeterMatrix {
   public:
    static constexpr unsigned infinity = 0;

    CoxeterMatrix() = default;
    explicit CoxeterMatrix(std::vector<std::vector<unsigned>> entries);

    std::size_t size() const noexcept {
      return _entries.size();
    }

    unsigned operator()(std::size_t i, std::size_t j) const {
      return _entries.at(i).at(j);
    }

    bool is_finite(std::size_t i, std::size_t j) const {
      return (*this)(i, j) != infinity;
    }

    bool commute(std::size_t i, std::size_t j) const {
      return (*this)(i, j) == 2;
    }

    std::vector<std::vector<unsigned>> const& entries() const noexcept {
      return _entries;
    }

    bool operator==(CoxeterMatrix const&) const = default;

   private:
    std::vector<std::vector<unsigned>> _entries;
  };

  // Whitespace-separated square integer grid; 0 stands for infinity.
  CoxeterMatrix parse_coxeter_matrix(std::string_view text);
  std::string   to_string(CoxeterMatrix const& m);

  struct Presentation {
    Alphabet          alphabet;
    CoxeterMatrix     matrix;
    std::vector<Rule> relations;
  };

  // s s -> 1 for every generator, and m(s,s') -> m(s',s) for s > s' with
  // finite m_{ss'}. Rule ids are 0, 1, ... in that order.
  Presentation presentation_from_matrix(CoxeterMatrix const& m, Alphabet alphabet);
  Presentation presentation_from_matrix(CoxeterMatrix const&     m,
                                        std::vector<letter_type> ranking);

  enum class Family : std::uint8_t { A, B, D, affine_A };

  struct Preset {
    Family      family;
    std::size_t size;
    // affine_A only: s0 > s1 > ... > sn instead of s0 < s1 < ... < sn
    bool descending = false;

    bool operator==(Preset const&) const = default;
  };

  // "a:<l>", "b:<l>", "d:<l>", "affine-a:<n>", "affine-a:<n>:desc".
  Preset      parse_preset(std::string_view text);
  std::string to_string(Preset const& p);

  // A, B, D use generators s1..sl with s_l greatest; affine A uses s0..sn
  // around a cycle.
  struct PresetData {
    CoxeterMatrix matrix;
    Alphabet      alphabet;
  };

  PresetData   preset_matrix(Preset const& p);
  Presentation preset_presentation(Preset const& p);

  // Label of the first generator (1 for A/B/D, 0 for affine A).
  std::size_t first_label(Family f) noexcept;

  enum class SijConvention : std::uint8_t {
    // i > j descending, i = j single letter, j = i + 1 empty
    descending,
    // i > j descending, i = j single letter, i < j ascending
    three_case,
  };

  // Words are returned as letters, i.e. labels minus first_label.
  word_type word_sij(std::size_t   i,
                     std::size_t   j,
                     SijConvention convention,
                     std::size_t   first_label = 0);

  // s_i s_{i-1} s_{i+1} s_i ... s_{j+1} s_j: the pairs (s_{t+1} s_t) for
  // t = i-1, ..., j. Requires j + 1 >= i.
  word_type word_shat(std::size_t i, std::size_t j, std::size_t first_label = 0);

  // One member of a printed rule family, before orientation.
  struct FamilyInstance {
    std::string              family;   // e.g. "A4", "D6", "(7)"
    std::vector<std::size_t> indices;  // the family's index values
    word_type                lhs;      // as printed on the left
    word_type                rhs;
  };

  // Every instance of the printed families over their index ranges. For
  // affine A this is the s0 > s1 > ... > sn convention.
  std::vector<FamilyInstance> closed_form_instances(Preset const& p);

  // Alphabet the closed-form families are written over.
  Alphabet closed_form_alphabet(Preset const& p);

  // Instances (plus the initial relations for affine A) oriented under
  // closed_form_alphabet(p) and interreduced.
  std::vector<Rule> closed_form_basis(Preset const& p);

  // Renames letter x to perm[x] and re-orients under target.
  std::vector<Rule> relabel(std::vector<Rule> const&        rules,
                            std::vector<letter_type> const& perm,
                            Alphabet const&                 target);

  struct InstanceAudit {
    enum class Verdict : std::uint8_t {
      in_basis,        // equal to a rule of the completed basis
      consequence,     // holds in the group but is not a basis rule
      not_a_relation,  // the two sides have different normal forms
      degenerate,      // both sides are the same word
    };

    FamilyInstance instance;
    Verdict        verdict;
    bool           flipped;  // printed left side is not the leading word
  };

  std::string_view to_string(InstanceAudit::Verdict v) noexcept;

  struct ClosedFormAudit {
    Preset                     preset;
    std::vector<InstanceAudit> instances;
    std::vector<Rule>          completed;
    // All instances, interreduced.
    std::vector<Rule> closed_form;
    // Instances that are relations of the group, interreduced.
    std::vector<Rule> validated;
    bool              closed_form_matches = false;
    bool              validated_matches   = false;
    // completed \ validated and validated \ completed
    std::vector<Rule> missing;
    std::vector<Rule> extra;
  };

  // Compares the printed families with a completed basis over the preset's
  // alphabet. For the ascending affine preset the families are relabeled
  // i -> n - i first. The completed basis must be closed.
  ClosedFormAudit audit_closed_form(Preset const& p, RewriteSystem const& completed);

  bool same_rule_set(std::vector<Rule> const& x, std::vector<Rule> const& y);

}  // namespace coxgs

#endif  // COXGS_COXETER_HPP_
