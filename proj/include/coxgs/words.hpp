#ifndef COXGS_WORDS_HPP_
#define COXGS_WORDS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coxgs {

  using letter_type = std::uint16_t;
  using word_type   = std::vector<letter_type>;

  // A finite, linearly ordered generating set. Letters are dense indices
  // 0..size()-1; names are display metadata only.
  //
  // ranking[0] is the greatest generator, ranking[size-1] the least.
  class Alphabet {
   public:
    Alphabet() = default;
    Alphabet(std::vector<std::string> names, std::vector<letter_type> ranking);

    // Names s<first>, s<first+1>, ... with the greatest-first ranking given.
    static Alphabet indexed(std::size_t n,
                            std::vector<letter_type> ranking,
                            std::size_t first_label = 0);

    std::size_t size() const noexcept {
      return _names.size();
    }

    std::string const& name(letter_type x) const;

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    std::vector<letter_type> const& ranking() const noexcept {
      return _ranking;
    }

    // 0 for the least letter, size()-1 for the greatest.
    std::size_t weight(letter_type x) const;

    std::size_t weight_unchecked(letter_type x) const noexcept {
      return _weight[x];
    }

    letter_type letter(std::string_view name) const;
    bool        contains_name(std::string_view name) const;

    void validate(std::span<letter_type const> w) const;

    bool operator==(Alphabet const&) const = default;

   private:
    std::vector<std::string> _names;
    std::vector<letter_type> _ranking;
    std::vector<std::size_t> _weight;
  };

  // Length first, then letter by letter under the alphabet's ranking.
  std::strong_ordering deglex_compare(std::span<letter_type const> u,
                                      std::span<letter_type const> v,
                                      Alphabet const&              order);

  // Unchecked variant for hot loops; letters must be valid.
  std::strong_ordering deglex_compare_unchecked(std::span<letter_type const> u,
                                                std::span<letter_type const> v,
                                                Alphabet const& order) noexcept;

  struct Ambiguity {
    enum class Kind : std::uint8_t { intersection, inclusion };

    Kind      kind;
    word_type witness;
    word_type left_margin;
    word_type right_margin;

    bool operator==(Ambiguity const&) const = default;
  };

  // Intersections: witness = u·right_margin = left_margin·v with a proper
  // overlap. Inclusions: u = left_margin·v·right_margin. Ordered by overlap
  // position from left to right, intersections first.
  std::vector<Ambiguity> find_ambiguities(std::span<letter_type const> u,
                                          std::span<letter_type const> v);

  // Returns the first position >= from at which pattern occurs in w, or
  // w.size() if none.
  std::size_t find_factor(std::span<letter_type const> w,
                          std::span<letter_type const> pattern,
                          std::size_t                  from = 0);

  bool contains_factor(std::span<letter_type const> w,
                       std::span<letter_type const> pattern);

  word_type concat(std::initializer_list<std::span<letter_type const>> parts);

  // "s0 s1 s0"; the empty word is "1".
  std::string to_string(std::span<letter_type const> w, Alphabet const& a);
  word_type   parse_word(std::string_view text, Alphabet const& a);

}  // namespace coxgs

#endif  // COXGS_WORDS_HPP_
