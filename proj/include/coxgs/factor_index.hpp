#ifndef COXGS_FACTOR_INDEX_HPP_
#define COXGS_FACTOR_INDEX_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "coxgs/words.hpp"

namespace coxgs {

  // Aho-Corasick automaton over a dense alphabet. Each pattern carries a
  // caller-chosen key (a rule id). The goto function is completed, so
  // next() is a single table lookup.
  class FactorIndex {
   public:
    using state_type = std::uint32_t;
    using key_type   = std::uint32_t;

    struct Match {
      std::size_t length;
      key_type    key;
    };

    static constexpr state_type root = 0;

    FactorIndex() = default;
    explicit FactorIndex(std::size_t alphabet_size);

    void clear(std::size_t alphabet_size);
    void add(std::span<letter_type const> pattern, key_type key);
    // Must be called after the last add() and before any query.
    void build();

    std::size_t alphabet_size() const noexcept {
      return _alphabet_size;
    }

    std::size_t number_of_states() const noexcept {
      return _depth.size();
    }

    std::size_t max_pattern_length() const noexcept {
      return _max_length;
    }

    state_type next(state_type s, letter_type x) const noexcept {
      return _goto[s * _alphabet_size + x];
    }

    // Patterns that end at the current position when the automaton is in
    // state s, longest first, ties by ascending key.
    std::span<Match const> matches(state_type s) const noexcept {
      return {_out.data() + _out_begin[s], _out.data() + _out_begin[s + 1]};
    }

    bool accepting(state_type s) const noexcept {
      return _out_begin[s] != _out_begin[s + 1];
    }

    std::size_t depth(state_type s) const noexcept {
      return _depth[s];
    }

    // Every (start position, key) such that the pattern for key occurs in w
    // at that start; sorted by start, then key.
    std::vector<std::pair<std::size_t, key_type>>
    all_occurrences(std::span<letter_type const> w) const;

   private:
    std::size_t             _alphabet_size = 0;
    std::size_t             _max_length    = 0;
    std::vector<state_type> _goto;
    std::vector<state_type> _fail;
    std::vector<std::size_t> _depth;
    std::vector<std::vector<Match>> _own;
    std::vector<Match>       _out;
    std::vector<std::size_t> _out_begin;
  };

}  // namespace coxgs

#endif  // COXGS_FACTOR_INDEX_HPP_
