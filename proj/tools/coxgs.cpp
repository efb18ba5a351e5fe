// coxgs: command-line front end.
//
// Exit status: 0 positive answer, 1 negative answer (capped, not closed,
// mismatch, pattern failures), 2 bad input or I/O failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "coxgs/completion.hpp"
#include "coxgs/coxeter.hpp"
#include "coxgs/enumerate.hpp"
#include "coxgs/errors.hpp"
#include "coxgs/hypothesis.hpp"
#include "coxgs/oracle.hpp"
#include "coxgs/rewrite.hpp"
#include "coxgs/serialize.hpp"

using namespace coxgs;
using json = nlohmann::json;

namespace {

  constexpr int exit_ok       = 0;
  constexpr int exit_negative = 1;
  constexpr int exit_error    = 2;

  struct SourceOptions {
    std::string preset;
    std::string file;
    std::string basis;
    std::string matrix;
  };

  struct CapOptions {
    std::size_t max_len   = 32;
    std::size_t max_rules = 10'000;
    std::size_t max_steps = 10'000'000;
  };

  // What the input options describe: a presentation to complete, or a
  // basis to use as is.
  struct Source {
    Alphabet                     alphabet;
    std::vector<Rule>            rules;
    std::optional<CoxeterMatrix> matrix;
    std::optional<Preset>        preset;
    bool                         is_basis = false;
  };

  void add_source(CLI::App* cmd, SourceOptions& o, bool with_matrix = true) {
    cmd->add_option("--preset", o.preset, "a:<l>, b:<l>, d:<l>, affine-a:<n>[:desc]");
    cmd->add_option("--file", o.file, "presentation file");
    cmd->add_option("--basis", o.basis, "basis file written by complete --out");
    if (with_matrix) {
      cmd->add_option("--matrix", o.matrix, "Coxeter matrix file (generators s0, s1, ...)");
    }
  }

  Source load_source(SourceOptions const& o) {
    int given = !o.preset.empty() + !o.file.empty() + !o.basis.empty();
    if (given > 1 || (given == 1 && !o.matrix.empty() && o.basis.empty())) {
      throw InvalidInput("give exactly one of --preset, --file, --basis, --matrix");
    }
    Source src;
    if (!o.matrix.empty()) {
      src.matrix = parse_coxeter_matrix(read_file(o.matrix));
    }
    if (!o.preset.empty()) {
      Preset p   = parse_preset(o.preset);
      auto   pr  = preset_presentation(p);
      src.preset = p;
      src.matrix = pr.matrix;
      src.alphabet = pr.alphabet;
      src.rules    = pr.relations;
    } else if (!o.file.empty()) {
      auto pt      = load_presentation(o.file);
      src.alphabet = pt.alphabet;
      src.rules    = oriented_relations(pt);
    } else if (!o.basis.empty()) {
      auto sys     = load_basis(o.basis);
      src.alphabet = sys.alphabet();
      src.rules    = sys.canonical_rules();
      src.is_basis = true;
      if (src.matrix && src.matrix->size() != src.alphabet.size()) {
        throw InvalidInput("basis has " + std::to_string(src.alphabet.size())
                           + " generators but the matrix has size "
                           + std::to_string(src.matrix->size()));
      }
    } else if (src.matrix) {
      std::vector<letter_type> rk;
      for (std::size_t i = src.matrix->size(); i-- > 0;) {
        rk.push_back(static_cast<letter_type>(i));
      }
      auto pr      = presentation_from_matrix(*src.matrix, rk);
      src.alphabet = pr.alphabet;
      src.rules    = pr.relations;
    } else {
      throw InvalidInput("no input: use --preset, --file, --basis or --matrix");
    }
    return src;
  }

  CompletionCaps caps_of(CapOptions const& c) {
    return CompletionCaps{c.max_len, c.max_rules, c.max_steps};
  }

  void add_caps(CLI::App* cmd, CapOptions& c, bool with_len = true) {
    if (with_len) {
      cmd->add_option("--max-len", c.max_len, "drop residues with longer left sides")
          ->capture_default_str();
    }
    cmd->add_option("--max-rules", c.max_rules, "stop after this many rules")
        ->capture_default_str();
    cmd->add_option("--max-steps", c.max_steps, "stop after this many compositions")
        ->capture_default_str();
  }

  // The basis itself, or the completion of the presentation. Returns
  // nullopt (after a diagnostic) when completion does not close.
  std::optional<RewriteSystem> closed_system(Source const& src, CompletionCaps const& caps) {
    if (src.is_basis) {
      return RewriteSystem(src.alphabet, src.rules);
    }
    auto res = complete(src.rules, src.alphabet, caps);
    if (res.status != CompletionStatus::closed) {
      std::cerr << "completion stopped: " << to_string(res.status) << " (cap " << res.cap
                << ")\n";
      return std::nullopt;
    }
    return std::move(res.system);
  }

  void print_rules(std::ostream& out, std::vector<Rule> const& rules, Alphabet const& a) {
    for (auto const& r : rules) {
      out << "  " << to_string(r.lhs, a) << " -> " << to_string(r.rhs, a) << '\n';
    }
  }

  std::string origin_name(DerivationRecord::Origin o) {
    switch (o) {
      case DerivationRecord::Origin::initial: return "initial";
      case DerivationRecord::Origin::composition: return "composition";
      case DerivationRecord::Origin::interreduction: return "interreduction";
    }
    return "?";
  }

  void write_log(std::string const& path, CompletionResult const& res, Alphabet const& a) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw InvalidInput("cannot write " + path);
    }
    for (auto const& d : res.log) {
      json j;
      j["id"]     = d.id;
      j["lhs"]    = to_string(d.lhs, a);
      j["rhs"]    = to_string(d.rhs, a);
      j["origin"] = origin_name(d.origin);
      if (d.origin != DerivationRecord::Origin::initial) {
        j["parents"] = {d.parent_f, d.parent_g};
      }
      if (d.origin == DerivationRecord::Origin::composition) {
        j["kind"] = d.kind == Ambiguity::Kind::intersection ? "intersection" : "inclusion";
        j["witness"] = to_string(d.witness, a);
      }
      out << j.dump() << '\n';
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Subcommands
  ////////////////////////////////////////////////////////////////////////

  int cmd_complete(SourceOptions const& so,
                   CapOptions const&    co,
                   std::string const&   out_path,
                   std::string const&   log_path,
                   bool                 quiet) {
    auto src = load_source(so);
    if (src.is_basis) {
      throw InvalidInput("complete takes a presentation, not a basis");
    }
    auto        res = complete(src.rules, src.alphabet, caps_of(co));
    auto const& a   = res.system.alphabet();
    std::cout << "status: " << to_string(res.status);
    if (res.status != CompletionStatus::closed) {
      std::cout << " (cap " << res.cap << ")";
    }
    std::cout << "\nrules: " << res.system.size() << '\n';
    std::cout << "compositions: " << res.stats.compositions_examined
              << " (nontrivial " << res.stats.nontrivial << ")\n";
    if (!quiet) {
      print_rules(std::cout, res.system.canonical_rules(), a);
    }
    if (!out_path.empty()) {
      save_basis(res.system, out_path);
    }
    if (!log_path.empty()) {
      write_log(log_path, res, a);
    }
    return res.status == CompletionStatus::closed ? exit_ok : exit_negative;
  }

  int cmd_reduce(SourceOptions const& so, CapOptions const& co, std::vector<std::string> const& words) {
    auto src = load_source(so);
    auto sys = closed_system(src, caps_of(co));
    if (!sys) {
      return exit_negative;
    }
    for (auto const& text : words) {
      auto w = parse_word(text, sys->alphabet());
      std::cout << to_string(sys->normal_form(w), sys->alphabet()) << '\n';
    }
    return exit_ok;
  }

  int cmd_verify(SourceOptions const& so) {
    auto          src = load_source(so);
    RewriteSystem sys(src.alphabet, src.rules);
    auto          res = verify_closed(sys);
    auto const&   a   = sys.alphabet();
    if (res.empty()) {
      std::cout << "closed: 0 nontrivial compositions\n";
      return exit_ok;
    }
    std::cout << "not closed: " << res.size() << " nontrivial compositions\n";
    for (auto const& c : res) {
      std::cout << "  (" << c.f << "," << c.g << ") "
                << (c.ambiguity.kind == Ambiguity::Kind::intersection ? "intersection"
                                                                       : "inclusion")
                << " on " << to_string(c.ambiguity.witness, a) << ": "
                << to_string(c.residue->lhs, a) << " -> " << to_string(c.residue->rhs, a)
                << '\n';
    }
    return exit_negative;
  }

  int cmd_enumerate(SourceOptions const& so,
                    std::size_t          len,
                    std::string const&   prefix_text,
                    bool                 counts,
                    bool                 as_json) {
    auto src = load_source(so);
    auto sys = closed_system(src, CompletionCaps{});
    if (!sys) {
      return exit_negative;
    }
    auto const& a = sys->alphabet();
    if (counts) {
      auto g = growth(*sys, len);
      if (as_json) {
        json j;
        j["counts"] = g.counts;
        j["total"]  = g.total ? json(*g.total) : json(nullptr);
        std::cout << j.dump() << '\n';
      } else {
        for (std::size_t k = 0; k < g.counts.size(); ++k) {
          std::cout << k << '\t' << g.counts[k] << '\n';
        }
        std::cout << "total\t" << (g.total ? std::to_string(*g.total) : "infinite") << '\n';
      }
      return exit_ok;
    }
    word_type prefix = prefix_text.empty() ? word_type{} : parse_word(prefix_text, a);
    stream_irreducible(*sys, len, prefix, [&](word_type const& w) {
      std::cout << to_string(w, a) << '\n';
      return true;
    });
    return exit_ok;
  }

  int cmd_hypothesis(SourceOptions const& so, CapOptions const& co, std::string const& mode_text, bool as_json) {
    auto src = load_source(so);
    if (!src.matrix) {
      throw InvalidInput("hypothesis needs a Coxeter matrix: use --preset or --matrix");
    }
    auto sys = closed_system(src, caps_of(co));
    if (!sys) {
      return exit_negative;
    }
    auto const  mode  = parse_match_mode(mode_text);
    auto        audit = audit_basis(*sys, *src.matrix, mode);
    auto const& a     = sys->alphabet();
    if (as_json) {
      json j;
      j["mode"] = std::string(to_string(mode));
      j["summary"] = {{"initial", audit.initial}, {"matched", audit.matched}, {"failed", audit.failed}};
      for (auto const& rep : audit.reports) {
        auto const& r = sys->rule(rep.rule);
        json        e;
        e["lhs"]     = to_string(r.lhs, a);
        e["rhs"]     = to_string(r.rhs, a);
        e["verdict"] = std::string(to_string(rep.verdict));
        if (rep.instance) {
          e["pattern"] = format_instance(*rep.instance, a);
        }
        if (rep.verdict == MatchReport::Verdict::no_match) {
          e["reason"] = rep.reason;
          if (rep.relaxation) {
            e["relaxation"] = {{"ordered", rep.relaxation->ordered},
                               {"parity", rep.relaxation->parity},
                               {"pattern", format_instance(*rep.relaxed_instance, a)}};
          }
        }
        j["rules"].push_back(e);
      }
      std::cout << j.dump(2) << '\n';
    } else {
      for (auto const& rep : audit.reports) {
        auto const& r = sys->rule(rep.rule);
        std::cout << to_string(r.lhs, a) << " -> " << to_string(r.rhs, a) << "  ["
                  << to_string(rep.verdict) << "]";
        if (rep.instance) {
          std::cout << "  " << format_instance(*rep.instance, a);
        }
        if (rep.verdict == MatchReport::Verdict::no_match) {
          std::cout << "  " << rep.reason;
          if (rep.relaxation) {
            std::cout << "; matches with"
                      << (rep.relaxation->ordered ? "" : " free first components")
                      << (!rep.relaxation->ordered && !rep.relaxation->parity ? " and" : "")
                      << (rep.relaxation->parity ? "" : " no parity rule") << ": "
                      << format_instance(*rep.relaxed_instance, a);
          } else {
            std::cout << "; no relaxation matches";
          }
        }
        std::cout << '\n';
      }
      std::cout << audit.failed << (audit.failed == 1 ? " rule fails" : " rules fail") << " ("
                << to_string(mode) << " mode); " << audit.matched << " matched, "
                << audit.initial << " initial\n";
    }
    return audit.failed == 0 ? exit_ok : exit_negative;
  }

  int cmd_oracle_compare(SourceOptions const& so,
                         CapOptions const&    co,
                         std::size_t          len,
                         std::size_t          samples,
                         std::uint64_t        seed) {
    auto src = load_source(so);
    if (!src.preset) {
      throw InvalidInput("oracle-compare needs --preset (the group model)");
    }
    if (!so.basis.empty()) {
      throw InvalidInput("give the basis through --preset only");
    }
    auto sys = closed_system(src, caps_of(co));
    if (!sys) {
      return exit_negative;
    }
    auto const g = growth(*sys, len);
    auto const c = cayley_growth(*src.preset, len);
    std::cout << "length\tbasis\toracle\n";
    std::optional<std::size_t> first_diff;
    for (std::size_t k = 0; k <= len; ++k) {
      std::cout << k << '\t' << g.counts[k] << '\t' << c.counts[k] << '\n';
      if (g.counts[k] != c.counts[k] && !first_diff) {
        first_diff = k;
      }
    }
    if (c.total) {
      auto const bt = g.total ? std::to_string(*g.total) : std::string("infinite");
      std::cout << "total\t" << bt << '\t' << *c.total << '\n';
      if (g.total != c.total && !first_diff) {
        std::cout << "totals differ\n";
        return exit_negative;
      }
    }
    if (first_diff) {
      std::cout << "mismatch at length " << *first_diff << '\n';
      return exit_negative;
    }
    // word problem on random pairs
    std::mt19937_64 rng(seed);
    auto const      k = sys->alphabet().size();
    std::uniform_int_distribution<std::size_t> len_dist(0, 10), letter(0, k - 1);
    auto const random_word = [&] {
      word_type w(len_dist(rng));
      for (auto& x : w) {
        x = static_cast<letter_type>(letter(rng));
      }
      return w;
    };
    for (std::size_t i = 0; i < samples; ++i) {
      auto u  = random_word();
      auto v  = random_word();
      bool nf = sys->normal_form(u) == sys->normal_form(v);
      bool el = element_of(*src.preset, u) == element_of(*src.preset, v);
      if (nf != el) {
        std::cout << "word problem disagrees on " << to_string(u, sys->alphabet()) << " / "
                  << to_string(v, sys->alphabet()) << '\n';
        return exit_negative;
      }
    }
    std::cout << "equal at all lengths 0.." << len;
    if (c.total) {
      std::cout << ", total " << *c.total;
    }
    std::cout << "; word problem agrees on " << samples << " random pairs (seed " << seed << ")\n";
    return exit_ok;
  }

  int cmd_audit(std::string const& preset_text, CapOptions const& co, bool verbose) {
    Preset const p   = parse_preset(preset_text);
    auto         pr  = preset_presentation(p);
    auto         res = complete(pr.relations, pr.alphabet, caps_of(co));
    if (res.status != CompletionStatus::closed) {
      std::cerr << "completion stopped: " << to_string(res.status) << '\n';
      return exit_negative;
    }
    auto        au = audit_closed_form(p, res.system);
    auto const& a  = res.system.alphabet();
    Alphabet const fa = closed_form_alphabet(p);
    std::size_t counts[4] = {0, 0, 0, 0};
    for (auto const& ia : au.instances) {
      ++counts[static_cast<int>(ia.verdict)];
      if (verbose || ia.verdict == InstanceAudit::Verdict::not_a_relation) {
        std::cout << ia.instance.family;
        for (auto i : ia.instance.indices) {
          std::cout << ' ' << i;
        }
        std::cout << ": " << to_string(ia.instance.lhs, fa) << " = "
                  << to_string(ia.instance.rhs, fa) << "  [" << to_string(ia.verdict)
                  << (ia.flipped ? ", flipped" : "") << "]\n";
      }
    }
    std::cout << "instances: " << au.instances.size() << " (in-basis " << counts[0]
              << ", consequence " << counts[1] << ", not-a-relation " << counts[2]
              << ", degenerate " << counts[3] << ")\n";
    if (p.family == Family::affine_A && !p.descending) {
      std::cout << "families relabeled s_i -> s_" << p.size << "-i\n";
    }
    std::cout << "completed basis: " << au.completed.size() << " rules\n";
    std::cout << "closed form (all instances): " << au.closed_form.size() << " rules, "
              << (au.closed_form_matches ? "equal" : "different") << '\n';
    std::cout << "closed form (relations only): " << au.validated.size() << " rules, "
              << (au.validated_matches ? "equal" : "different") << '\n';
    if (!au.missing.empty()) {
      std::cout << "missing from the closed form:\n";
      print_rules(std::cout, au.missing, a);
    }
    if (!au.extra.empty()) {
      std::cout << "not in the completed basis:\n";
      print_rules(std::cout, au.extra, a);
    }
    return au.closed_form_matches ? exit_ok : exit_negative;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner-Shirshov bases for Coxeter groups"};
  app.require_subcommand(1);

  SourceOptions so;
  CapOptions    co;
  std::string   out_path, log_path, prefix, mode = "strict";
  std::vector<std::string> words;
  std::size_t   len = 8, samples = 200;
  std::uint64_t seed = 1;
  bool          counts = false, as_json = false, quiet = false, verbose = false;

  auto* c_complete = app.add_subcommand("complete", "complete a presentation");
  add_source(c_complete, so);
  add_caps(c_complete, co);
  c_complete->add_option("--out", out_path, "write the basis here");
  c_complete->add_option("--log", log_path, "write the derivation log (JSON lines) here");
  c_complete->add_flag("--quiet,-q", quiet, "do not list the rules");

  auto* c_reduce = app.add_subcommand("reduce", "print normal forms");
  add_source(c_reduce, so);
  add_caps(c_reduce, co);
  c_reduce->add_option("words", words, "words such as \"s1 s0 s1\"; 1 is the empty word")
      ->required();

  auto* c_verify = app.add_subcommand("verify", "list nontrivial compositions of a rule set");
  add_source(c_verify, so);

  auto* c_enum = app.add_subcommand("enumerate", "irreducible words or their counts");
  add_source(c_enum, so);
  c_enum->add_option("--max-len", len, "longest word")->capture_default_str();
  c_enum->add_option("--prefix", prefix, "only words starting with this word");
  c_enum->add_flag("--counts", counts, "print counts per length");
  c_enum->add_flag("--json", as_json, "machine-readable counts");

  auto* c_hyp = app.add_subcommand("hypothesis", "match basis rules against the chain pattern");
  add_source(c_hyp, so);
  add_caps(c_hyp, co);
  c_hyp->add_option("--mode", mode, "strict or relaxed")->capture_default_str();
  c_hyp->add_flag("--json", as_json, "machine-readable report");

  auto* c_oracle = app.add_subcommand("oracle-compare", "compare word counts with the group model");
  c_oracle->add_option("--preset", so.preset, "group")->required();
  add_caps(c_oracle, co, false);
  c_oracle->add_option("--max-len", len, "compare lengths 0..L")->capture_default_str();
  c_oracle->add_option("--samples", samples, "random word pairs for the word problem")
      ->capture_default_str();
  c_oracle->add_option("--seed", seed, "random seed")->capture_default_str();

  auto* c_audit = app.add_subcommand("audit-closed-form",
                                     "compare the closed-form rule families with completion");
  std::string audit_preset;
  c_audit->add_option("--preset", audit_preset, "a:<l>, b:<l>, d:<l>, affine-a:<n>[:desc]")
      ->required();
  add_caps(c_audit, co);
  c_audit->add_flag("--verbose,-v", verbose, "list every instance");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_error;
  }

  try {
    if (c_complete->parsed()) {
      return cmd_complete(so, co, out_path, log_path, quiet);
    }
    if (c_reduce->parsed()) {
      return cmd_reduce(so, co, words);
    }
    if (c_verify->parsed()) {
      return cmd_verify(so);
    }
    if (c_enum->parsed()) {
      return cmd_enumerate(so, len, prefix, counts, as_json);
    }
    if (c_hyp->parsed()) {
      return cmd_hypothesis(so, co, mode, as_json);
    }
    if (c_oracle->parsed()) {
      return cmd_oracle_compare(so, co, len, samples, seed);
    }
    if (c_audit->parsed()) {
      return cmd_audit(audit_preset, co, verbose);
    }
  } catch (ParseError const& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return exit_error;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_error;
  }
  return exit_error;
}
