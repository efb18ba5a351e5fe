#include "coxgs/coxeter.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <string>
#include <utility>

#include "coxgs/errors.hpp"

namespace coxgs {

  CoxeterMatrix::CoxeterMatrix(std::vector<std::vector<unsigned>> entries)
      : _entries(std::move(entries)) {
    std::size_t const n = _entries.size();
    if (n == 0) {
      throw InvalidInput("Coxeter matrix must be nonempty");
    }
    if (n > 0xFFFF) {
      throw InvalidInput("Coxeter matrix too large");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (_entries[i].size() != n) {
        throw InvalidInput("Coxeter matrix must be square");
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (_entries[i][i] != 1) {
        throw InvalidInput("Coxeter matrix diagonal entry (" + std::to_string(i) + ","
                           + std::to_string(i) + ") must be 1");
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) {
          continue;
        }
        unsigned const m = _entries[i][j];
        if (m != _entries[j][i]) {
          throw InvalidInput("Coxeter matrix must be symmetric");
        }
        if (m == 1) {
          throw InvalidInput("off-diagonal Coxeter matrix entries must be >= 2 or 0");
        }
      }
    }
  }

  CoxeterMatrix parse_coxeter_matrix(std::string_view text) {
    std::vector<std::vector<unsigned>> rows;
    std::size_t                        line_no = 0;
    std::size_t                        pos     = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      std::string_view line = text.substr(pos, end - pos);
      ++line_no;
      pos = end + 1;
      if (auto h = line.find('#'); h != std::string_view::npos) {
        line = line.substr(0, h);
      }
      std::vector<unsigned> row;
      std::size_t           i = 0;
      while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'
                                   || line[i] == ',')) {
          ++i;
        }
        if (i == line.size()) {
          break;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r'
               && line[j] != ',') {
          ++j;
        }
        std::string_view tok = line.substr(i, j - i);
        unsigned         v   = 0;
        if (tok == "inf" || tok == "oo") {
          v = CoxeterMatrix::infinity;
        } else {
          auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
          if (ec != std::errc() || p != tok.data() + tok.size()) {
            throw ParseError(line_no, "bad matrix entry '" + std::string(tok) + "'");
          }
        }
        row.push_back(v);
        i = j;
      }
      if (!row.empty()) {
        rows.push_back(std::move(row));
      }
    }
    try {
      return CoxeterMatrix(std::move(rows));
    } catch (InvalidInput const& e) {
      throw ParseError(line_no, e.what());
    }
  }

  std::string to_string(CoxeterMatrix const& m) {
    std::string out;
    for (auto const& row : m.entries()) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (j != 0) {
          out += ' ';
        }
        out += std::to_string(row[j]);
      }
      out += '\n';
    }
    return out;
  }

  Presentation presentation_from_matrix(CoxeterMatrix const& m, Alphabet alphabet) {
    if (alphabet.size() != m.size()) {
      throw InvalidInput("alphabet size does not match the Coxeter matrix");
    }
    std::vector<Rule> rels;
    rule_id           id = 0;
    for (std::size_t s = 0; s < m.size(); ++s) {
      auto x = static_cast<letter_type>(s);
      rels.push_back(Rule{id++, {x, x}, {}});
    }
    // s > s' in the ranking
    for (std::size_t s = 0; s < m.size(); ++s) {
      for (std::size_t t = 0; t < m.size(); ++t) {
        if (s == t || !m.is_finite(s, t)) {
          continue;
        }
        auto x = static_cast<letter_type>(s);
        auto y = static_cast<letter_type>(t);
        if (alphabet.weight(x) < alphabet.weight(y)) {
          continue;
        }
        word_type lhs, rhs;
        for (unsigned k = 0; k < m(s, t); ++k) {
          lhs.push_back(k % 2 == 0 ? x : y);
          rhs.push_back(k % 2 == 0 ? y : x);
        }
        rels.push_back(make_rule(id++, std::move(lhs), std::move(rhs), alphabet));
      }
    }
    return Presentation{std::move(alphabet), m, std::move(rels)};
  }

  Presentation presentation_from_matrix(CoxeterMatrix const&     m,
                                        std::vector<letter_type> ranking) {
    return presentation_from_matrix(m, Alphabet::indexed(m.size(), std::move(ranking)));
  }

  namespace {
    std::size_t parse_size(std::string_view s, std::string_view whole) {
      std::size_t v = 0;
      auto [p, ec]  = std::from_chars(s.data(), s.data() + s.size(), v);
      if (s.empty() || ec != std::errc() || p != s.data() + s.size()) {
        throw InvalidInput("bad preset '" + std::string(whole) + "'");
      }
      return v;
    }

    std::vector<std::vector<unsigned>> path_matrix(std::size_t l) {
      std::vector<std::vector<unsigned>> m(l, std::vector<unsigned>(l, 2));
      for (std::size_t i = 0; i < l; ++i) {
        m[i][i] = 1;
      }
      for (std::size_t i = 0; i + 1 < l; ++i) {
        m[i][i + 1] = m[i + 1][i] = 3;
      }
      return m;
    }

    std::vector<letter_type> ascending_ranking(std::size_t n) {
      std::vector<letter_type> r(n);
      for (std::size_t i = 0; i < n; ++i) {
        r[i] = static_cast<letter_type>(n - 1 - i);
      }
      return r;
    }

    std::vector<letter_type> descending_ranking(std::size_t n) {
      std::vector<letter_type> r(n);
      for (std::size_t i = 0; i < n; ++i) {
        r[i] = static_cast<letter_type>(i);
      }
      return r;
    }
  }  // namespace

  Preset parse_preset(std::string_view text) {
    auto const c = text.find(':');
    if (c == std::string_view::npos) {
      throw InvalidInput("bad preset '" + std::string(text) + "'");
    }
    std::string_view kind = text.substr(0, c);
    std::string_view rest = text.substr(c + 1);
    Preset           p{Family::A, 0, false};
    if (kind == "a" || kind == "A") {
      p.family = Family::A;
    } else if (kind == "b" || kind == "B") {
      p.family = Family::B;
    } else if (kind == "d" || kind == "D") {
      p.family = Family::D;
    } else if (kind == "affine-a" || kind == "affine-A") {
      p.family = Family::affine_A;
      if (auto c2 = rest.find(':'); c2 != std::string_view::npos) {
        if (rest.substr(c2 + 1) != "desc") {
          throw InvalidInput("bad preset '" + std::string(text) + "'");
        }
        p.descending = true;
        rest         = rest.substr(0, c2);
      }
    } else {
      throw InvalidInput("unknown preset family '" + std::string(kind) + "'");
    }
    p.size = parse_size(rest, text);
    // throws on out-of-range sizes
    preset_matrix(p);
    return p;
  }

  std::string to_string(Preset const& p) {
    switch (p.family) {
      case Family::A: return "a:" + std::to_string(p.size);
      case Family::B: return "b:" + std::to_string(p.size);
      case Family::D: return "d:" + std::to_string(p.size);
      case Family::affine_A:
        return "affine-a:" + std::to_string(p.size) + (p.descending ? ":desc" : "");
    }
    return "?";
  }

  std::size_t first_label(Family f) noexcept {
    return f == Family::affine_A ? 0 : 1;
  }

  PresetData preset_matrix(Preset const& p) {
    std::size_t const l = p.size;
    switch (p.family) {
      case Family::A: {
        if (l < 1 || l > 1000) {
          throw InvalidInput("type A needs 1 <= l <= 1000");
        }
        return {CoxeterMatrix(path_matrix(l)), Alphabet::indexed(l, ascending_ranking(l), 1)};
      }
      case Family::B: {
        if (l < 2 || l > 1000) {
          throw InvalidInput("type B needs 2 <= l <= 1000");
        }
        auto m          = path_matrix(l);
        m[l - 2][l - 1] = m[l - 1][l - 2] = 4;
        return {CoxeterMatrix(std::move(m)), Alphabet::indexed(l, ascending_ranking(l), 1)};
      }
      case Family::D: {
        if (l < 3 || l > 1000) {
          throw InvalidInput("type D needs 3 <= l <= 1000");
        }
        auto m          = path_matrix(l);
        m[l - 2][l - 1] = m[l - 1][l - 2] = 2;
        m[l - 3][l - 1] = m[l - 1][l - 3] = 3;
        return {CoxeterMatrix(std::move(m)), Alphabet::indexed(l, ascending_ranking(l), 1)};
      }
      case Family::affine_A: {
        if (l < 1 || l > 1000) {
          throw InvalidInput("affine type A needs 1 <= n <= 1000");
        }
        std::size_t const N = l + 1;
        std::vector<std::vector<unsigned>> m(N, std::vector<unsigned>(N, 2));
        for (std::size_t i = 0; i < N; ++i) {
          m[i][i] = 1;
        }
        if (N == 2) {
          m[0][1] = m[1][0] = CoxeterMatrix::infinity;
        } else {
          for (std::size_t i = 0; i < N; ++i) {
            m[i][(i + 1) % N] = m[(i + 1) % N][i] = 3;
          }
        }
        auto rk = p.descending ? descending_ranking(N) : ascending_ranking(N);
        return {CoxeterMatrix(std::move(m)), Alphabet::indexed(N, std::move(rk), 0)};
      }
    }
    throw InvalidInput("unknown preset family");
  }

  Presentation preset_presentation(Preset const& p) {
    auto d = preset_matrix(p);
    return presentation_from_matrix(d.matrix, std::move(d.alphabet));
  }

  ////////////////////////////////////////////////////////////////////////
  // Word builders
  ////////////////////////////////////////////////////////////////////////

  namespace {
    letter_type to_letter(std::size_t label, std::size_t first) {
      if (label < first) {
        throw InvalidInput("generator label " + std::to_string(label) + " below "
                           + std::to_string(first));
      }
      return static_cast<letter_type>(label - first);
    }
  }  // namespace

  word_type word_sij(std::size_t i, std::size_t j, SijConvention convention, std::size_t first) {
    word_type w;
    if (i >= j) {
      for (std::size_t t = i + 1; t-- > j;) {
        w.push_back(to_letter(t, first));
      }
      return w;
    }
    if (convention == SijConvention::descending) {
      if (j == i + 1) {
        return w;
      }
      throw InvalidInput("s_{" + std::to_string(i) + "," + std::to_string(j)
                         + "} is undefined for j > i + 1");
    }
    for (std::size_t t = i; t <= j; ++t) {
      w.push_back(to_letter(t, first));
    }
    return w;
  }

  word_type word_shat(std::size_t i, std::size_t j, std::size_t first) {
    if (i == 0 || j + 1 < i) {
      throw InvalidInput("hat-s_{" + std::to_string(i) + "," + std::to_string(j)
                         + "} needs 1 <= i <= j + 1");
    }
    word_type w;
    for (std::size_t t = i - 1; t <= j; ++t) {
      w.push_back(to_letter(t + 1, first));
      w.push_back(to_letter(t, first));
    }
    return w;
  }

  ////////////////////////////////////////////////////////////////////////
  // Closed-form families
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using SC = SijConvention;

    struct Builder {
      std::size_t                  first;
      std::vector<FamilyInstance>& out;

      word_type g(std::initializer_list<std::size_t> labels) const {
        word_type w;
        for (auto x : labels) {
          w.push_back(to_letter(x, first));
        }
        return w;
      }

      word_type s(std::size_t i, std::size_t j) const {
        return word_sij(i, j, SC::descending, first);
      }

      word_type up(std::size_t i, std::size_t j) const {
        return word_sij(i, j, SC::three_case, first);
      }

      void add(std::string fam,
               std::vector<std::size_t> idx,
               std::initializer_list<word_type> lhs,
               std::initializer_list<word_type> rhs) {
        word_type l, r;
        for (auto const& w : lhs) {
          l.insert(l.end(), w.begin(), w.end());
        }
        for (auto const& w : rhs) {
          r.insert(r.end(), w.begin(), w.end());
        }
        out.push_back(FamilyInstance{std::move(fam), std::move(idx), std::move(l), std::move(r)});
      }
    };

    void families_A(Builder& b, std::size_t l, std::string const& prefix) {
      for (std::size_t i = 1; i <= l; ++i) {
        b.add(prefix + "1", {i}, {b.g({i, i})}, {});
      }
      for (std::size_t i = 1; i <= l; ++i) {
        for (std::size_t j = 1; j + 1 < i; ++j) {
          b.add(prefix + "2", {i, j}, {b.g({i, j})}, {b.g({j, i})});
        }
      }
      for (std::size_t i = 1; i < l; ++i) {
        b.add(prefix + "3", {i}, {b.g({i + 1, i, i + 1})}, {b.g({i, i + 1, i})});
      }
      for (std::size_t i = 1; i < l; ++i) {
        for (std::size_t j = 1; j <= i; ++j) {
          b.add(prefix + "4", {i, j}, {b.s(i + 1, j), b.g({i + 1})}, {b.g({i}), b.s(i + 1, j)});
        }
      }
    }

    void families_B(Builder& b, std::size_t l) {
      for (std::size_t i = 1; i <= l; ++i) {
        b.add("B1", {i}, {b.g({i, i})}, {});
      }
      for (std::size_t i = 1; i <= l; ++i) {
        for (std::size_t j = 1; j + 1 < i; ++j) {
          b.add("B2", {i, j}, {b.g({i, j})}, {b.g({j, i})});
        }
      }
      for (std::size_t i = 1; i + 1 < l; ++i) {
        b.add("B3", {i}, {b.g({i + 1, i, i + 1})}, {b.g({i, i + 1, i})});
      }
      for (std::size_t i = 1; i + 1 < l; ++i) {
        for (std::size_t j = 1; j <= i; ++j) {
          b.add("B4", {i, j}, {b.s(i + 1, j), b.g({i + 1})}, {b.g({i}), b.s(i + 1, j)});
        }
      }
      b.add("B5", {}, {b.g({l, l - 1, l, l - 1})}, {b.g({l - 1, l, l - 1, l})});
      for (std::size_t j = 1; j < l; ++j) {
        b.add("B6", {j}, {b.s(l, j), b.s(l, j)}, {b.g({l - 1}), b.s(l, j), b.s(l, j + 1)});
      }
    }

    // s_l s_{l-2} s_{l-3} ... s_j, with s_{l,l-1} = s_l and s_{l,l} = 1
    word_type sD(Builder const& b, std::size_t l, std::size_t j) {
      if (j == l) {
        return {};
      }
      if (j + 1 == l) {
        return b.g({l});
      }
      word_type w = b.g({l});
      auto      t = b.s(l - 2, j);
      w.insert(w.end(), t.begin(), t.end());
      return w;
    }

    void families_D(Builder& b, std::size_t l) {
      b.add("D1", {}, {b.g({l, l})}, {});
      b.add("D2", {}, {b.g({l, l - 1})}, {b.g({l - 1, l})});
      b.add("D3", {}, {b.g({l, l - 2, l})}, {b.g({l - 2, l, l - 2})});
      for (std::size_t j = 1; j + 1 < l; ++j) {
        b.add("D4", {j}, {sD(b, l, j), b.s(l - 1, j)},
              {b.g({l - 1}), sD(b, l, j), b.s(l - 1, j + 1)});
      }
      for (std::size_t j = 1; j + 1 < l; ++j) {
        b.add("D5", {j}, {sD(b, l, j), b.g({l - 1, l})}, {b.g({l - 2}), sD(b, l, j), b.g({l - 1})});
      }
      for (std::size_t j = 1; j + 1 < l; ++j) {
        for (std::size_t k = j + 1; k + 1 < l; ++k) {
          b.add("D6", {j, k}, {sD(b, l, j), b.s(l - 1, k)},
                {b.g({l - 2}), sD(b, l, j), b.s(l - 1, k), sD(b, l, k + 1)});
        }
      }
      for (std::size_t i = 1; i < l; ++i) {
        b.add("D7", {i}, {b.g({i, i})}, {});
      }
      for (std::size_t i = 1; i <= l; ++i) {
        for (std::size_t j = 1; j + 2 < i; ++j) {
          b.add("D8", {i, j}, {b.g({i, j})}, {b.g({j, i})});
        }
      }
      for (std::size_t i = 1; i + 1 < l; ++i) {
        b.add("D9", {i}, {b.g({i + 1, i, i + 1})}, {b.g({i, i + 1, i})});
      }
      for (std::size_t i = 1; i + 1 < l; ++i) {
        for (std::size_t j = 1; j <= i; ++j) {
          b.add("D10", {i, j}, {b.s(i + 1, j), b.g({i + 1})}, {b.g({i}), b.s(i + 1, j)});
        }
      }
      families_A(b, l - 1, "A");
    }

    void families_affine(Builder& b, std::size_t n) {
      auto const sh = [&](std::size_t i, std::size_t j) { return word_shat(i, j, b.first); };
      // (1)
      for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 2; j <= n; ++j) {
          if (i == 0 && j == n) {
            continue;
          }
          b.add("(1)", {i, j}, {b.up(i, j), b.g({i})}, {b.g({i + 1}), b.up(i, j)});
        }
      }
      // (2)
      for (std::size_t j = 2; j + 1 < n; ++j) {
        for (std::size_t k = n; k > j + 1; --k) {
          b.add("(2)", {j, k}, {b.g({0}), b.s(n, k), b.g({j})}, {b.g({j, 0}), b.s(n, k)});
        }
      }
      // (3)
      for (std::size_t j = n; j-- > 0;) {
        b.add("(3)", {j}, {b.g({0}), b.s(n, j), b.g({j + 1})}, {b.g({j, 0}), b.s(n, j)});
      }
      // (4)
      for (std::size_t j = 2; j < n; ++j) {
        b.add("(4)", {j}, {b.g({0}), b.s(n, j), b.g({0})}, {b.g({n, 0}), b.s(n, j)});
      }
      // (5)
      for (std::size_t j = 2; j <= n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          b.add("(5)", {j, k}, {b.g({0}), b.s(n, j), sh(1, k), b.g({k + 1})},
                {b.g({n, 0}), b.s(n, j), sh(1, k)});
        }
      }
      // (6)
      for (std::size_t j = 1; j < n; ++j) {
        b.add("(6)", {j}, {b.up(0, j), b.g({n, 0, n})}, {b.g({1}), b.up(0, j), b.g({n, 0})});
      }
      // (7)
      for (std::size_t j = 2; j < n; ++j) {
        for (std::size_t k = j - 1; k <= n; ++k) {
          b.add("(7)", {j, k}, {b.g({0}), b.s(n, j), b.g({1, 0}), b.s(n, k), b.g({1})},
                {b.g({n, 0}), b.s(n, j), b.g({1, 0}), b.s(n, k)});
        }
      }
      // (8)
      for (std::size_t j = 2; j < n; ++j) {
        for (std::size_t k = j + 1; k <= n; ++k) {
          for (std::size_t l = 1; l < n; ++l) {
            b.add("(8)", {j, k, l},
                  {b.g({0}), b.s(n, j), b.g({1, 0}), b.s(n, k), sh(2, l), b.g({l + 1})},
                  {b.g({n, 0}), b.s(n, j), b.g({1, 0}), b.s(n, k), sh(2, l)});
          }
        }
      }
      // (9)
      for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t k = n - 1; k > j + 1; --k) {
          b.add("(9)", {j, k}, {b.up(0, j), b.g({n, k, 0}), b.s(n, k)},
                {b.g({1}), b.up(0, j), b.g({n, 0}), b.s(n - 1, k), b.g({k + 1})});
        }
      }
      // (10)
      for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t k = n - 1; k > j + 1; --k) {
          for (std::size_t l = k - 1; l > 1; --l) {
            b.add("(10)", {j, k, l}, {b.up(0, j), b.g({n}), b.s(k, l), b.g({0}), b.s(n, l)},
                  {b.g({1}), b.up(0, j), b.g({n, 0}), b.s(n - 1, l), b.s(k + 1, l + 1)});
          }
        }
      }
    }
  }  // namespace

  std::vector<FamilyInstance> closed_form_instances(Preset const& p) {
    preset_matrix(p);
    std::vector<FamilyInstance> out;
    Builder                     b{first_label(p.family), out};
    switch (p.family) {
      case Family::A: families_A(b, p.size, "A"); break;
      case Family::B: families_B(b, p.size); break;
      case Family::D: families_D(b, p.size); break;
      case Family::affine_A:
        if (p.size < 2) {
          throw InvalidInput("closed form for affine type A needs n >= 2");
        }
        families_affine(b, p.size);
        break;
    }
    return out;
  }

  Alphabet closed_form_alphabet(Preset const& p) {
    Preset q = p;
    if (q.family == Family::affine_A) {
      q.descending = true;
    }
    return preset_matrix(q).alphabet;
  }

  namespace {
    std::vector<Rule> oriented_instances(std::vector<FamilyInstance> const& inst,
                                         Alphabet const&                    a) {
      std::vector<Rule> out;
      for (auto const& fi : inst) {
        if (fi.lhs != fi.rhs) {
          out.push_back(oriented_rule(static_cast<rule_id>(out.size()), fi.lhs, fi.rhs, a));
        }
      }
      return out;
    }

    void append_initial(std::vector<Rule>& rules, Preset const& p, Alphabet const& a) {
      if (p.family != Family::affine_A) {
        return;
      }
      auto pres = presentation_from_matrix(preset_matrix(p).matrix, a);
      for (auto& r : pres.relations) {
        r.id = static_cast<rule_id>(rules.size());
        rules.push_back(std::move(r));
      }
    }
  }  // namespace

  std::vector<Rule> closed_form_basis(Preset const& p) {
    Alphabet const a     = closed_form_alphabet(p);
    auto           rules = oriented_instances(closed_form_instances(p), a);
    append_initial(rules, p, a);
    return interreduce(rules, a);
  }

  std::vector<Rule> relabel(std::vector<Rule> const&        rules,
                            std::vector<letter_type> const& perm,
                            Alphabet const&                 target) {
    auto const map = [&](word_type const& w) {
      word_type out;
      out.reserve(w.size());
      for (auto x : w) {
        if (x >= perm.size()) {
          throw InvalidInput("relabel: letter outside the permutation");
        }
        out.push_back(perm[x]);
      }
      return out;
    };
    std::vector<Rule> out;
    out.reserve(rules.size());
    for (auto const& r : rules) {
      out.push_back(oriented_rule(r.id, map(r.lhs), map(r.rhs), target));
    }
    std::sort(out.begin(), out.end(), [&](Rule const& x, Rule const& y) {
      return canonical_less(x, y, target);
    });
    return out;
  }

  std::string_view to_string(InstanceAudit::Verdict v) noexcept {
    switch (v) {
      case InstanceAudit::Verdict::in_basis: return "in-basis";
      case InstanceAudit::Verdict::consequence: return "consequence";
      case InstanceAudit::Verdict::not_a_relation: return "not-a-relation";
      case InstanceAudit::Verdict::degenerate: return "degenerate";
    }
    return "?";
  }

  bool same_rule_set(std::vector<Rule> const& x, std::vector<Rule> const& y) {
    if (x.size() != y.size()) {
      return false;
    }
    auto key = [](std::vector<Rule> const& v) {
      std::vector<std::pair<word_type, word_type>> k;
      for (auto const& r : v) {
        k.emplace_back(r.lhs, r.rhs);
      }
      std::sort(k.begin(), k.end());
      return k;
    };
    return key(x) == key(y);
  }

  namespace {
    std::vector<Rule> difference(std::vector<Rule> const& x, std::vector<Rule> const& y) {
      std::vector<Rule> out;
      for (auto const& r : x) {
        bool found = std::any_of(y.begin(), y.end(), [&](Rule const& q) {
          return q.lhs == r.lhs && q.rhs == r.rhs;
        });
        if (!found) {
          out.push_back(r);
        }
      }
      return out;
    }
  }  // namespace

  namespace {
    // Families for affine A are written with s0 > s1 > ... > sn; for the
    // ascending preset they are read through i -> n - i.
    std::vector<letter_type> family_relabeling(Preset const& p) {
      std::size_t const        n = preset_matrix(p).alphabet.size();
      std::vector<letter_type> perm(n);
      for (std::size_t i = 0; i < n; ++i) {
        bool const flip = p.family == Family::affine_A && !p.descending;
        perm[i]         = static_cast<letter_type>(flip ? n - 1 - i : i);
      }
      return perm;
    }

    word_type apply(std::vector<letter_type> const& perm, word_type const& w) {
      word_type out;
      out.reserve(w.size());
      for (auto x : w) {
        out.push_back(perm[x]);
      }
      return out;
    }
  }  // namespace

  ClosedFormAudit audit_closed_form(Preset const& p, RewriteSystem const& completed) {
    Alphabet const a = preset_matrix(p).alphabet;
    if (!(completed.alphabet() == a)) {
      throw InvalidInput("completed basis is not over the preset's alphabet");
    }
    auto const      perm = family_relabeling(p);
    ClosedFormAudit res;
    res.preset    = p;
    res.completed = completed.canonical_rules();

    std::vector<Rule> all, valid;
    for (auto const& fi : closed_form_instances(p)) {
      InstanceAudit ia{fi, InstanceAudit::Verdict::degenerate, false};
      if (fi.lhs != fi.rhs) {
        auto const lhs = apply(perm, fi.lhs);
        Rule r = oriented_rule(static_cast<rule_id>(all.size()), lhs, apply(perm, fi.rhs), a);
        ia.flipped = r.lhs != lhs;
        bool in    = std::any_of(res.completed.begin(), res.completed.end(),
                              [&](Rule const& q) { return q.lhs == r.lhs && q.rhs == r.rhs; });
        if (in) {
          ia.verdict = InstanceAudit::Verdict::in_basis;
        } else if (completed.normal_form(r.lhs) == completed.normal_form(r.rhs)) {
          ia.verdict = InstanceAudit::Verdict::consequence;
        } else {
          ia.verdict = InstanceAudit::Verdict::not_a_relation;
        }
        if (ia.verdict != InstanceAudit::Verdict::not_a_relation) {
          valid.push_back(r);
        }
        all.push_back(std::move(r));
      }
      res.instances.push_back(std::move(ia));
    }
    append_initial(all, p, a);
    append_initial(valid, p, a);
    res.closed_form         = interreduce(all, a);
    res.validated           = interreduce(valid, a);
    res.closed_form_matches = same_rule_set(res.closed_form, res.completed);
    res.validated_matches   = same_rule_set(res.validated, res.completed);
    res.missing             = difference(res.completed, res.validated);
    res.extra               = difference(res.validated, res.completed);
    return res;
  }

}  // namespace coxgs
