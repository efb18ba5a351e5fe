#ifndef COXGS_ORACLE_HPP_
#define COXGS_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "coxgs/coxeter.hpp"
#include "coxgs/enumerate.hpp"
#include "coxgs/words.hpp"

namespace coxgs {

  // Concrete models of the preset groups. Elements are stored by their
  // window w(1), ..., w(k); a word acts left to right, each generator by
  // right multiplication.
  //
  //   A_l        permutations of 1..l+1, s_i swaps positions i, i+1
  //   B_l        signed permutations of 1..l, s_l negates position l
  //   D_l        even signed permutations, s_l swaps positions l-1, l and
  //              negates both
  //   affine A_n affine permutations with window length n+1; s_0 sends
  //              (w(1), w(n+1)) to (w(n+1) - (n+1), w(1) + (n+1))
  class GroupElement {
   public:
    GroupElement() = default;
    GroupElement(Family f, std::vector<std::int64_t> window);

    static GroupElement identity(Preset const& p);

    Family family() const noexcept {
      return _family;
    }

    std::vector<std::int64_t> const& window() const noexcept {
      return _window;
    }

    bool is_identity() const noexcept;

    // this * s, with s given as a letter of the preset.
    void apply(letter_type s);

    bool operator==(GroupElement const&) const = default;

    std::string to_string() const;

   private:
    Family                    _family = Family::A;
    std::vector<std::int64_t> _window;
  };

  struct GroupElementHash {
    std::size_t operator()(GroupElement const& g) const noexcept;
  };

  GroupElement generator_action(Preset const& p, letter_type s);
  GroupElement element_of(Preset const& p, std::span<letter_type const> w);

  // Smallest k >= 1 with (g)^k = 1, or 0 if none up to bound.
  std::size_t element_order(Preset const& p, std::span<letter_type const> w, std::size_t bound);

  // Breadth-first search of the Cayley graph from the identity; c_k is the
  // number of elements at distance k. For finite groups the search runs to
  // exhaustion and total is set. Throws ResourceError when more than
  // max_elements would be stored.
  GrowthSeries cayley_growth(Preset const& p,
                             std::size_t   max_len,
                             std::size_t   max_elements = 20'000'000);

}  // namespace coxgs

#endif  // COXGS_ORACLE_HPP_
