#include "coxgs/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>
#include <utility>

#include "coxgs/errors.hpp"

namespace coxgs {

  GroupElement::GroupElement(Family f, std::vector<std::int64_t> window)
      : _family(f), _window(std::move(window)) {
    std::size_t const k = _window.size();
    if (k == 0) {
      throw InvalidInput("group element window must be nonempty");
    }
    std::vector<bool> seen(k, false);
    std::size_t       negatives = 0;
    for (auto v : _window) {
      std::int64_t r;
      if (f == Family::affine_A) {
        auto const K = static_cast<std::int64_t>(k);
        r            = ((v - 1) % K + K) % K;
      } else {
        std::int64_t a = v < 0 ? -v : v;
        if (f == Family::A && v < 0) {
          throw InvalidInput("permutation window has a negative entry");
        }
        if (a < 1 || a > static_cast<std::int64_t>(k)) {
          throw InvalidInput("window entry out of range");
        }
        r = a - 1;
        negatives += v < 0;
      }
      if (seen[static_cast<std::size_t>(r)]) {
        throw InvalidInput("window is not a bijection");
      }
      seen[static_cast<std::size_t>(r)] = true;
    }
    if (f == Family::D && negatives % 2 != 0) {
      throw InvalidInput("even signed permutation has an odd number of signs");
    }
    if (f == Family::affine_A) {
      auto const K   = static_cast<std::int64_t>(k);
      auto const sum = std::accumulate(_window.begin(), _window.end(), std::int64_t{0});
      if (sum != K * (K + 1) / 2) {
        throw InvalidInput("affine window has the wrong sum");
      }
    }
  }

  GroupElement GroupElement::identity(Preset const& p) {
    std::size_t k = p.family == Family::A ? p.size + 1
                    : p.family == Family::affine_A ? p.size + 1
                                                  : p.size;
    preset_matrix(p);
    std::vector<std::int64_t> w(k);
    std::iota(w.begin(), w.end(), 1);
    return GroupElement(p.family, std::move(w));
  }

  bool GroupElement::is_identity() const noexcept {
    for (std::size_t i = 0; i < _window.size(); ++i) {
      if (_window[i] != static_cast<std::int64_t>(i + 1)) {
        return false;
      }
    }
    return true;
  }

  void GroupElement::apply(letter_type x) {
    std::size_t const k = _window.size();
    std::size_t const s = x;
    auto&             w = _window;
    switch (_family) {
      case Family::A:
        if (s + 1 >= k) {
          throw InvalidInput("generator out of range");
        }
        std::swap(w[s], w[s + 1]);
        return;
      case Family::B:
        if (s >= k) {
          throw InvalidInput("generator out of range");
        }
        if (s + 1 == k) {
          w[k - 1] = -w[k - 1];
        } else {
          std::swap(w[s], w[s + 1]);
        }
        return;
      case Family::D:
        if (s >= k) {
          throw InvalidInput("generator out of range");
        }
        if (s + 1 == k) {
          std::swap(w[k - 2], w[k - 1]);
          w[k - 2] = -w[k - 2];
          w[k - 1] = -w[k - 1];
        } else {
          std::swap(w[s], w[s + 1]);
        }
        return;
      case Family::affine_A: {
        if (s >= k) {
          throw InvalidInput("generator out of range");
        }
        if (s == 0) {
          auto const K     = static_cast<std::int64_t>(k);
          auto const first = w[0];
          w[0]             = w[k - 1] - K;
          w[k - 1]         = first + K;
        } else {
          std::swap(w[s - 1], w[s]);
        }
        return;
      }
    }
  }

  std::string GroupElement::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < _window.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += std::to_string(_window[i]);
    }
    return out + "]";
  }

  std::size_t GroupElementHash::operator()(GroupElement const& g) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto v : g.window()) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  GroupElement generator_action(Preset const& p, letter_type s) {
    auto g = GroupElement::identity(p);
    g.apply(s);
    return g;
  }

  GroupElement element_of(Preset const& p, std::span<letter_type const> w) {
    auto g = GroupElement::identity(p);
    for (auto x : w) {
      g.apply(x);
    }
    return g;
  }

  std::size_t element_order(Preset const& p, std::span<letter_type const> w, std::size_t bound) {
    auto g = GroupElement::identity(p);
    for (std::size_t k = 1; k <= bound; ++k) {
      for (auto x : w) {
        g.apply(x);
      }
      if (g.is_identity()) {
        return k;
      }
    }
    return 0;
  }

  GrowthSeries cayley_growth(Preset const& p, std::size_t max_len, std::size_t max_elements) {
    auto const        gens   = preset_matrix(p).alphabet.size();
    bool const        finite = p.family != Family::affine_A;
    GrowthSeries      res;
    std::unordered_set<GroupElement, GroupElementHash> seen;
    std::vector<GroupElement> frontier{GroupElement::identity(p)};
    seen.insert(frontier.front());
    res.counts.push_back(1);
    std::uint64_t total = 1;
    for (std::size_t depth = 1; !frontier.empty() && (finite || depth <= max_len); ++depth) {
      std::vector<GroupElement> next;
      for (auto const& g : frontier) {
        for (std::size_t s = 0; s < gens; ++s) {
          GroupElement h = g;
          h.apply(static_cast<letter_type>(s));
          if (seen.insert(h).second) {
            if (seen.size() > max_elements) {
              throw ResourceError("Cayley graph search exceeded "
                                  + std::to_string(max_elements) + " elements");
            }
            next.push_back(std::move(h));
          }
        }
      }
      if (depth <= max_len) {
        res.counts.push_back(next.size());
      }
      total += next.size();
      frontier = std::move(next);
    }
    while (res.counts.size() <= max_len) {
      res.counts.push_back(0);
    }
    if (finite) {
      res.total = total;
    }
    return res;
  }

}  // namespace coxgs
