#include "coxgs/factor_index.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "coxgs/errors.hpp"

namespace coxgs {

  namespace {
    constexpr FactorIndex::state_type no_state
        = std::numeric_limits<FactorIndex::state_type>::max();
  }

  FactorIndex::FactorIndex(std::size_t alphabet_size) {
    clear(alphabet_size);
  }

  void FactorIndex::clear(std::size_t alphabet_size) {
    _alphabet_size = alphabet_size;
    _max_length    = 0;
    _goto.assign(alphabet_size, no_state);
    _fail.assign(1, root);
    _depth.assign(1, 0);
    _own.assign(1, {});
    _out.clear();
    _out_begin.clear();
  }

  void FactorIndex::add(std::span<letter_type const> pattern, key_type key) {
    if (pattern.empty()) {
      throw InvalidInput("cannot index the empty word");
    }
    state_type s = root;
    for (auto x : pattern) {
      if (x >= _alphabet_size) {
        throw InvalidInput("pattern letter out of range");
      }
      state_type& t = _goto[s * _alphabet_size + x];
      if (t == no_state) {
        t = static_cast<state_type>(_depth.size());
        _depth.push_back(_depth[s] + 1);
        _fail.push_back(root);
        _own.emplace_back();
        _goto.resize(_goto.size() + _alphabet_size, no_state);
      }
      s = _goto[s * _alphabet_size + x];
    }
    _own[s].push_back({pattern.size(), key});
    _max_length = std::max(_max_length, pattern.size());
  }

  void FactorIndex::build() {
    std::size_t const n = _depth.size();
    std::vector<state_type> order;
    order.reserve(n);
    std::queue<state_type> q;
    for (std::size_t x = 0; x < _alphabet_size; ++x) {
      state_type& t = _goto[x];
      if (t == no_state) {
        t = root;
      } else {
        _fail[t] = root;
        q.push(t);
      }
    }
    while (!q.empty()) {
      state_type s = q.front();
      q.pop();
      order.push_back(s);
      for (std::size_t x = 0; x < _alphabet_size; ++x) {
        state_type& t = _goto[s * _alphabet_size + x];
        if (t == no_state) {
          t = _goto[_fail[s] * _alphabet_size + x];
        } else {
          _fail[t] = _goto[_fail[s] * _alphabet_size + x];
          q.push(t);
        }
      }
    }
    // Collect outputs along the suffix-link chain; BFS order guarantees the
    // fail target is finished first.
    std::vector<std::vector<Match>> all(n);
    auto by_length_then_key = [](Match const& a, Match const& b) {
      return a.length != b.length ? a.length > b.length : a.key < b.key;
    };
    all[root] = _own[root];
    for (state_type s : order) {
      all[s] = _own[s];
      auto const& inherited = all[_fail[s]];
      all[s].insert(all[s].end(), inherited.begin(), inherited.end());
      std::sort(all[s].begin(), all[s].end(), by_length_then_key);
    }
    _out.clear();
    _out_begin.assign(n + 1, 0);
    for (std::size_t s = 0; s < n; ++s) {
      _out_begin[s] = _out.size();
      _out.insert(_out.end(), all[s].begin(), all[s].end());
    }
    _out_begin[n] = _out.size();
  }

  std::vector<std::pair<std::size_t, FactorIndex::key_type>>
  FactorIndex::all_occurrences(std::span<letter_type const> w) const {
    std::vector<std::pair<std::size_t, key_type>> result;
    state_type                                    s = root;
    for (std::size_t i = 0; i < w.size(); ++i) {
      s = next(s, w[i]);
      for (auto const& m : matches(s)) {
        result.emplace_back(i + 1 - m.length, m.key);
      }
    }
    std::sort(result.begin(), result.end());
    return result;
  }

}  // namespace coxgs
