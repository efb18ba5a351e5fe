#include "coxgs/words.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "coxgs/errors.hpp"

namespace coxgs {

  Alphabet::Alphabet(std::vector<std::string> names,
                     std::vector<letter_type> ranking)
      : _names(std::move(names)), _ranking(std::move(ranking)) {
    if (_names.empty()) {
      throw InvalidInput("alphabet must have at least one generator");
    }
    if (_ranking.size() != _names.size()) {
      throw InvalidInput("ranking has " + std::to_string(_ranking.size())
                         + " entries, expected "
                         + std::to_string(_names.size()));
    }
    std::unordered_set<std::string> seen;
    for (auto const& n : _names) {
      if (n.empty()) {
        throw InvalidInput("generator names must be nonempty");
      }
      if (n == "1") {
        throw InvalidInput("\"1\" is reserved for the empty word");
      }
      if (n.find_first_of(" \t\r\n=<") != std::string::npos) {
        throw InvalidInput("generator name \"" + n
                           + "\" contains a reserved character");
      }
      if (!seen.insert(n).second) {
        throw InvalidInput("duplicate generator name \"" + n + "\"");
      }
    }
    _weight.assign(_names.size(), _names.size());
    for (std::size_t i = 0; i < _ranking.size(); ++i) {
      letter_type x = _ranking[i];
      if (x >= _names.size() || _weight[x] != _names.size()) {
        throw InvalidInput("ranking is not a permutation of the generators");
      }
      _weight[x] = _names.size() - 1 - i;
    }
  }

  Alphabet Alphabet::indexed(std::size_t              n,
                             std::vector<letter_type> ranking,
                             std::size_t              first_label) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back("s" + std::to_string(i + first_label));
    }
    return Alphabet(std::move(names), std::move(ranking));
  }

  std::string const& Alphabet::name(letter_type x) const {
    if (x >= _names.size()) {
      throw InvalidInput("letter " + std::to_string(x) + " out of range");
    }
    return _names[x];
  }

  std::size_t Alphabet::weight(letter_type x) const {
    if (x >= _names.size()) {
      throw InvalidInput("letter " + std::to_string(x) + " out of range");
    }
    return _weight[x];
  }

  letter_type Alphabet::letter(std::string_view name) const {
    auto it = std::find(_names.begin(), _names.end(), name);
    if (it == _names.end()) {
      throw InvalidInput("unknown generator \"" + std::string(name) + "\"");
    }
    return static_cast<letter_type>(it - _names.begin());
  }

  bool Alphabet::contains_name(std::string_view name) const {
    return std::find(_names.begin(), _names.end(), name) != _names.end();
  }

  void Alphabet::validate(std::span<letter_type const> w) const {
    for (auto x : w) {
      if (x >= _names.size()) {
        throw InvalidInput("letter " + std::to_string(x)
                           + " out of range for alphabet of size "
                           + std::to_string(_names.size()));
      }
    }
  }

  std::strong_ordering deglex_compare_unchecked(std::span<letter_type const> u,
                                                std::span<letter_type const> v,
                                                Alphabet const& order) noexcept {
    if (u.size() != v.size()) {
      return u.size() <=> v.size();
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i] != v[i]) {
        return order.weight_unchecked(u[i]) <=> order.weight_unchecked(v[i]);
      }
    }
    return std::strong_ordering::equal;
  }

  std::strong_ordering deglex_compare(std::span<letter_type const> u,
                                      std::span<letter_type const> v,
                                      Alphabet const&              order) {
    order.validate(u);
    order.validate(v);
    return deglex_compare_unchecked(u, v, order);
  }

  std::vector<Ambiguity> find_ambiguities(std::span<letter_type const> u,
                                          std::span<letter_type const> v) {
    if (u.empty() || v.empty()) {
      throw InvalidInput("ambiguities are only defined for nonempty words");
    }
    std::vector<Ambiguity> result;
    // Intersections, scanning the start of the overlap left to right.
    std::size_t const max_overlap = std::min(u.size(), v.size()) - 1;
    for (std::size_t start = u.size() - max_overlap; start < u.size();
         ++start) {
      std::size_t k = u.size() - start;
      if (std::equal(u.begin() + start, u.end(), v.begin(), v.begin() + k)) {
        Ambiguity amb{Ambiguity::Kind::intersection, {}, {}, {}};
        amb.left_margin.assign(u.begin(), u.begin() + start);
        amb.right_margin.assign(v.begin() + k, v.end());
        amb.witness.assign(u.begin(), u.end());
        amb.witness.insert(
            amb.witness.end(), amb.right_margin.begin(), amb.right_margin.end());
        result.push_back(std::move(amb));
      }
    }
    // Inclusions of v in u.
    if (v.size() <= u.size()) {
      for (std::size_t pos = 0; pos + v.size() <= u.size(); ++pos) {
        if (!std::equal(v.begin(), v.end(), u.begin() + pos)) {
          continue;
        }
        if (u.size() == v.size()) {
          // u = v in place is vacuous
          continue;
        }
        Ambiguity amb{Ambiguity::Kind::inclusion, {}, {}, {}};
        amb.witness.assign(u.begin(), u.end());
        amb.left_margin.assign(u.begin(), u.begin() + pos);
        amb.right_margin.assign(u.begin() + pos + v.size(), u.end());
        result.push_back(std::move(amb));
      }
    }
    return result;
  }

  std::size_t find_factor(std::span<letter_type const> w,
                          std::span<letter_type const> pattern,
                          std::size_t                  from) {
    if (pattern.size() > w.size()) {
      return w.size();
    }
    auto it = std::search(
        w.begin() + std::min(from, w.size()), w.end(), pattern.begin(), pattern.end());
    return static_cast<std::size_t>(it - w.begin());
  }

  bool contains_factor(std::span<letter_type const> w,
                       std::span<letter_type const> pattern) {
    if (pattern.empty()) {
      return true;
    }
    return find_factor(w, pattern) != w.size();
  }

  word_type concat(std::initializer_list<std::span<letter_type const>> parts) {
    word_type out;
    for (auto p : parts) {
      out.insert(out.end(), p.begin(), p.end());
    }
    return out;
  }

  std::string to_string(std::span<letter_type const> w, Alphabet const& a) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += a.name(w[i]);
    }
    return out;
  }

  word_type parse_word(std::string_view text, Alphabet const& a) {
    std::istringstream in{std::string(text)};
    std::string        tok;
    word_type          out;
    bool               saw_one = false;
    std::size_t        count   = 0;
    while (in >> tok) {
      ++count;
      if (tok == "1") {
        saw_one = true;
        continue;
      }
      out.push_back(a.letter(tok));
    }
    if (saw_one && count > 1) {
      throw InvalidInput("\"1\" denotes the empty word and must stand alone");
    }
    return out;
  }

}  // namespace coxgs
