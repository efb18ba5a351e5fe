#include "coxgs/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "coxgs/errors.hpp"

namespace coxgs {

  using json = nlohmann::json;

  namespace {
    constexpr std::string_view basis_format = "coxgs-basis";
    constexpr int              basis_version = 1;

    std::string_view trim(std::string_view s) {
      auto b = s.find_first_not_of(" \t\r\n");
      if (b == std::string_view::npos) {
        return {};
      }
      auto e = s.find_last_not_of(" \t\r\n");
      return s.substr(b, e - b + 1);
    }

    std::vector<std::string> split_ws(std::string_view s) {
      std::istringstream       in{std::string(s)};
      std::vector<std::string> out;
      std::string              tok;
      while (in >> tok) {
        out.push_back(tok);
      }
      return out;
    }
  }  // namespace

  std::string basis_to_string(RewriteSystem const& sys) {
    auto const&       a = sys.alphabet();
    std::ostringstream out;
    out << "{\n";
    out << "  \"format\": " << json(basis_format).dump() << ",\n";
    out << "  \"version\": " << basis_version << ",\n";
    out << "  \"generators\": " << json(a.names()).dump() << ",\n";
    out << "  \"ranking\": " << json(a.ranking()).dump() << ",\n";
    out << "  \"rules\": [";
    auto rules = sys.canonical_rules();
    for (std::size_t i = 0; i < rules.size(); ++i) {
      out << (i == 0 ? "\n    " : ",\n    ");
      out << json::array({rules[i].lhs, rules[i].rhs}).dump();
    }
    out << (rules.empty() ? "]\n" : "\n  ]\n");
    out << "}\n";
    return out.str();
  }

  RewriteSystem basis_from_string(std::string_view text) {
    json j;
    try {
      j = json::parse(text);
    } catch (json::parse_error const& e) {
      throw InvalidInput(std::string("malformed basis file: ") + e.what());
    }
    try {
      if (j.at("format").get<std::string>() != basis_format) {
        throw InvalidInput("not a coxgs basis file");
      }
      if (j.at("version").get<int>() != basis_version) {
        throw InvalidInput("unsupported basis file version");
      }
      Alphabet a(j.at("generators").get<std::vector<std::string>>(),
                 j.at("ranking").get<std::vector<letter_type>>());
      std::vector<Rule> rules;
      rule_id           id = 0;
      for (auto const& r : j.at("rules")) {
        if (!r.is_array() || r.size() != 2) {
          throw InvalidInput("each rule must be a [lhs, rhs] pair");
        }
        rules.push_back(make_rule(id++,
                                  r[0].get<word_type>(),
                                  r[1].get<word_type>(),
                                  a));
      }
      return RewriteSystem(std::move(a), std::move(rules));
    } catch (json::exception const& e) {
      throw InvalidInput(std::string("malformed basis file: ") + e.what());
    }
  }

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw InvalidInput("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  void save_basis(RewriteSystem const& sys, std::string const& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw InvalidInput("cannot write " + path);
    }
    out << basis_to_string(sys);
  }

  RewriteSystem load_basis(std::string const& path) {
    return basis_from_string(read_file(path));
  }

  PresentationText parse_presentation(std::string_view text) {
    std::vector<std::string> names;
    std::vector<std::string> ranking_names;
    bool                     ascending     = true;
    std::size_t              ranking_line  = 0;
    std::size_t              generator_line = 0;
    std::vector<std::pair<std::string, std::size_t>> relation_text;

    std::istringstream in{std::string(text)};
    std::string        raw;
    std::size_t        lineno = 0;
    while (std::getline(in, raw)) {
      ++lineno;
      std::string_view line = raw;
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      line = trim(line);
      if (line.empty()) {
        continue;
      }
      if (line.starts_with("generators:")) {
        if (generator_line != 0) {
          throw ParseError(lineno, "generators declared twice");
        }
        generator_line = lineno;
        names          = split_ws(line.substr(11));
        if (names.empty()) {
          throw ParseError(lineno, "no generators declared");
        }
      } else if (line.starts_with("ranking:")) {
        if (ranking_line != 0) {
          throw ParseError(lineno, "ranking declared twice");
        }
        ranking_line = lineno;
        auto body    = line.substr(8);
        bool has_lt  = body.find('<') != std::string_view::npos;
        bool has_gt  = body.find('>') != std::string_view::npos;
        if (has_lt && has_gt) {
          throw ParseError(lineno, "ranking mixes '<' and '>'");
        }
        ascending = !has_gt;
        std::string cleaned(body);
        for (char& c : cleaned) {
          if (c == '<' || c == '>') {
            c = ' ';
          }
        }
        ranking_names = split_ws(cleaned);
      } else if (line.find('=') != std::string_view::npos) {
        relation_text.emplace_back(std::string(line), lineno);
      } else {
        throw ParseError(lineno, "expected 'generators:', 'ranking:' or a relation 'u = v'");
      }
    }
    if (generator_line == 0) {
      throw ParseError(lineno == 0 ? 1 : lineno, "missing 'generators:' line");
    }
    std::vector<letter_type> ranking;
    if (ranking_line == 0) {
      // default: later generators are greater
      for (std::size_t i = names.size(); i-- > 0;) {
        ranking.push_back(static_cast<letter_type>(i));
      }
    } else {
      if (ranking_names.size() != names.size()) {
        throw ParseError(ranking_line,
                         "ranking must list every generator exactly once");
      }
      for (auto const& n : ranking_names) {
        auto it = std::find(names.begin(), names.end(), n);
        if (it == names.end()) {
          throw ParseError(ranking_line, "unknown generator \"" + n + "\" in ranking");
        }
        ranking.push_back(static_cast<letter_type>(it - names.begin()));
      }
      if (ascending) {
        std::reverse(ranking.begin(), ranking.end());
      }
    }
    PresentationText result;
    try {
      result.alphabet = Alphabet(names, ranking);
    } catch (InvalidInput const& e) {
      throw ParseError(ranking_line != 0 ? ranking_line : generator_line, e.what());
    }
    for (auto const& [rel, ln] : relation_text) {
      auto eq = rel.find('=');
      if (rel.find('=', eq + 1) != std::string::npos) {
        throw ParseError(ln, "relation has more than one '='");
      }
      try {
        auto lhs = parse_word(trim(std::string_view(rel).substr(0, eq)), result.alphabet);
        auto rhs = parse_word(trim(std::string_view(rel).substr(eq + 1)), result.alphabet);
        if (lhs == rhs) {
          throw ParseError(ln, "relation is trivial (both sides equal)");
        }
        result.relations.emplace_back(std::move(lhs), std::move(rhs));
        result.relation_lines.push_back(ln);
      } catch (InvalidInput const& e) {
        throw ParseError(ln, e.what());
      }
    }
    return result;
  }

  PresentationText load_presentation(std::string const& path) {
    return parse_presentation(read_file(path));
  }

  std::string presentation_to_string(RewriteSystem const& sys) {
    auto const&        a = sys.alphabet();
    std::ostringstream out;
    out << "generators:";
    for (auto const& n : a.names()) {
      out << ' ' << n;
    }
    out << "\nranking:";
    auto const& r = a.ranking();
    for (std::size_t i = 0; i < r.size(); ++i) {
      out << (i == 0 ? " " : " > ") << a.name(r[i]);
    }
    out << '\n';
    for (auto const& rule : sys.canonical_rules()) {
      out << to_string(rule.lhs, a) << " = " << to_string(rule.rhs, a) << '\n';
    }
    return out.str();
  }

  std::vector<Rule> oriented_relations(PresentationText const& p) {
    std::vector<Rule> rules;
    rule_id           id = 0;
    for (auto const& [u, v] : p.relations) {
      rules.push_back(oriented_rule(id++, u, v, p.alphabet));
    }
    return rules;
  }

}  // namespace coxgs
