#include "coxgs/completion.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <string>

#include "coxgs/errors.hpp"

namespace coxgs {

  namespace {

    bool consistent(Rule const& f, Rule const& g, Ambiguity const& amb) {
      auto const& w = amb.witness;
      auto const& a = amb.left_margin;
      auto const& b = amb.right_margin;
      if (amb.kind == Ambiguity::Kind::intersection) {
        return !a.empty() && !b.empty() && a.size() < f.lhs.size()
               && b.size() < g.lhs.size()
               && f.lhs.size() + g.lhs.size() > w.size()
               && w == concat({f.lhs, b}) && w == concat({a, g.lhs});
      }
      return w == f.lhs && w == concat({a, g.lhs, b})
             && (a.size() + b.size() != 0 || f.id != g.id);
    }

    std::pair<word_type, word_type> raw_sides(Rule const&      f,
                                              Rule const&      g,
                                              Ambiguity const& amb) {
      if (amb.kind == Ambiguity::Kind::intersection) {
        return {concat({f.rhs, amb.right_margin}), concat({amb.left_margin, g.rhs})};
      }
      return {f.rhs, concat({amb.left_margin, g.rhs, amb.right_margin})};
    }

    struct PendingPair {
      word_type   witness;
      std::size_t seq;
      rule_id     f;
      rule_id     g;
      Ambiguity   ambiguity;
    };

    struct Equation {
      word_type               u;
      word_type               v;
      DerivationRecord::Origin origin;
      rule_id                 parent_f = 0;
      rule_id                 parent_g = 0;
      Ambiguity::Kind         kind     = Ambiguity::Kind::intersection;
      word_type               witness;
    };

    // Shared by complete() and interreduce(): maintains an interreduced
    // system while equations are fed in.
    class Engine {
     public:
      Engine(Alphabet const& a, CompletionCaps const& caps, bool track_pairs)
          : _sys(a),
            _caps(caps),
            _track_pairs(track_pairs),
            _queue(PairOrder{&_sys.alphabet()}) {}

      void push(Equation e) {
        _equations.push_back(std::move(e));
      }

      // Returns false if the rule cap fired.
      bool drain() {
        while (!_equations.empty()) {
          Equation e = std::move(_equations.front());
          _equations.pop_front();
          auto nu = _sys.normal_form(e.u);
          auto nv = _sys.normal_form(e.v);
          if (nu == nv) {
            continue;
          }
          Rule r = oriented_rule(_sys.next_id(), std::move(nu), std::move(nv), _sys.alphabet());
          if (r.lhs.size() > _caps.max_word_len) {
            _length_capped = true;
            ++_stats.residues_discarded;
            continue;
          }
          insert(std::move(r), e);
          if (_sys.size() > _caps.max_rules) {
            return false;
          }
        }
        return true;
      }

      bool pop(PendingPair& out) {
        while (!_queue.empty()) {
          // priority_queue::top is const; the copy is cheap at these sizes
          out = _queue.top();
          _queue.pop();
          if (_sys.contains(out.f) && _sys.contains(out.g)) {
            return true;
          }
        }
        return false;
      }

      RewriteSystem&       system() noexcept { return _sys; }
      CompletionStats&     stats() noexcept { return _stats; }
      bool                 length_capped() const noexcept { return _length_capped; }
      std::vector<DerivationRecord>& log() noexcept { return _log; }

     private:
      struct PairOrder {
        Alphabet const* alphabet;
        // priority_queue pops the greatest, so "greater" means later
        bool operator()(PendingPair const& x, PendingPair const& y) const {
          auto c = deglex_compare_unchecked(x.witness, y.witness, *alphabet);
          if (c != std::strong_ordering::equal) {
            return c == std::strong_ordering::greater;
          }
          return x.seq > y.seq;
        }
      };

      void insert(Rule r, Equation const& e) {
        rule_id const id = r.id;
        _log.push_back(DerivationRecord{id, r.lhs, r.rhs, e.origin, e.parent_f,
                                        e.parent_g, e.kind, e.witness});
        ++_stats.rules_added;
        word_type const lhs = r.lhs;
        _sys.add(std::move(r));
        // Rules whose left side contains the new one are removed and fed
        // back as equations.
        std::vector<Rule> displaced;
        for (auto const& q : _sys.rules()) {
          if (q.id != id && contains_factor(q.lhs, lhs)) {
            displaced.push_back(q);
          }
        }
        for (auto const& q : displaced) {
          _sys.remove(q.id);
          ++_stats.rules_removed;
          _equations.push_back(Equation{q.lhs, q.rhs,
                                        DerivationRecord::Origin::interreduction,
                                        q.id, id, Ambiguity::Kind::inclusion, q.lhs});
        }
        std::vector<std::pair<rule_id, word_type>> updates;
        for (auto const& q : _sys.rules()) {
          if (q.id == id) {
            continue;
          }
          auto nr = _sys.normal_form(q.rhs);
          if (nr != q.rhs) {
            updates.emplace_back(q.id, std::move(nr));
          }
        }
        for (auto& [qid, nr] : updates) {
          _sys.replace_rhs(qid, std::move(nr));
        }
        if (_track_pairs) {
          Rule const& nr = _sys.rule(id);
          for (auto const& q : _sys.rules()) {
            enqueue(nr, q);
            if (q.id != id) {
              enqueue(q, nr);
            }
          }
        }
      }

      void enqueue(Rule const& f, Rule const& g) {
        for (auto& amb : find_ambiguities(f.lhs, g.lhs)) {
          word_type w = amb.witness;
          _queue.push(PendingPair{std::move(w), _seq++, f.id, g.id, std::move(amb)});
        }
      }

      RewriteSystem        _sys;
      CompletionCaps       _caps;
      bool                 _track_pairs;
      std::deque<Equation> _equations;
      std::priority_queue<PendingPair, std::vector<PendingPair>, PairOrder> _queue;
      std::size_t          _seq = 0;
      bool                 _length_capped = false;
      CompletionStats      _stats;
      std::vector<DerivationRecord> _log;
    };

  }  // namespace

  CompositionResidue compose(Rule const&          f,
                             Rule const&          g,
                             Ambiguity const&     amb,
                             RewriteSystem const& sys) {
    if (!consistent(f, g, amb)) {
      throw InvalidInput("ambiguity does not match the left sides of the rules");
    }
    CompositionResidue out{f.id, g.id, amb, raw_sides(f, g, amb), std::nullopt};
    auto x = sys.normal_form(out.raw.first);
    auto y = sys.normal_form(out.raw.second);
    if (x != y) {
      out.residue = oriented_rule(sys.next_id(), std::move(x), std::move(y), sys.alphabet());
    }
    return out;
  }

  std::vector<CompositionResidue> verify_closed(RewriteSystem const& sys) {
    std::vector<CompositionResidue> out;
    auto const&                     rules = sys.rules();
    for (auto const& f : rules) {
      for (auto const& g : rules) {
        for (auto const& amb : find_ambiguities(f.lhs, g.lhs)) {
          auto c = compose(f, g, amb, sys);
          if (c.residue) {
            out.push_back(std::move(c));
          }
        }
      }
    }
    return out;
  }

  std::string_view to_string(CompletionStatus s) noexcept {
    switch (s) {
      case CompletionStatus::closed:
        return "closed";
      case CompletionStatus::length_capped:
        return "length-capped";
      case CompletionStatus::rule_capped:
        return "rule-capped";
      case CompletionStatus::step_capped:
        return "step-capped";
    }
    return "unknown";
  }

  CompletionResult complete(std::vector<Rule> const& initial,
                            Alphabet const&          alphabet,
                            CompletionCaps const&    caps) {
    if (caps.max_word_len == 0 || caps.max_rules == 0 || caps.max_steps == 0) {
      throw InvalidInput("completion caps must be positive");
    }
    for (auto const& r : initial) {
      make_rule(r.id, r.lhs, r.rhs, alphabet);
    }
    Engine engine(alphabet, caps, true);
    for (std::size_t i = 0; i < initial.size(); ++i) {
      engine.push(Equation{initial[i].lhs, initial[i].rhs,
                           DerivationRecord::Origin::initial,
                           static_cast<rule_id>(i), static_cast<rule_id>(i),
                           Ambiguity::Kind::intersection, {}});
    }
    auto finish = [&](CompletionStatus status, std::size_t cap) {
      CompletionResult res{std::move(engine.system()), status, cap,
                           engine.stats(), std::move(engine.log())};
      return res;
    };
    if (!engine.drain()) {
      return finish(CompletionStatus::rule_capped, caps.max_rules);
    }
    PendingPair p;
    while (true) {
      while (engine.pop(p)) {
        if (engine.stats().compositions_examined == caps.max_steps) {
          return finish(CompletionStatus::step_capped, caps.max_steps);
        }
        ++engine.stats().compositions_examined;
        auto const& sys = engine.system();
        auto        c   = compose(sys.rule(p.f), sys.rule(p.g), p.ambiguity, sys);
        if (!c.residue) {
          continue;
        }
        ++engine.stats().nontrivial;
        engine.push(Equation{c.residue->lhs, c.residue->rhs,
                             DerivationRecord::Origin::composition, p.f, p.g,
                             p.ambiguity.kind, p.ambiguity.witness});
        if (!engine.drain()) {
          return finish(CompletionStatus::rule_capped, caps.max_rules);
        }
      }
      if (engine.length_capped()) {
        return finish(CompletionStatus::length_capped, caps.max_word_len);
      }
      // Queue exhausted: confirm closure before claiming it.
      auto open = verify_closed(engine.system());
      if (open.empty()) {
        return finish(CompletionStatus::closed, 0);
      }
      for (auto& c : open) {
        engine.push(Equation{c.residue->lhs, c.residue->rhs,
                             DerivationRecord::Origin::composition, c.f, c.g,
                             c.ambiguity.kind, c.ambiguity.witness});
      }
      if (!engine.drain()) {
        return finish(CompletionStatus::rule_capped, caps.max_rules);
      }
    }
  }

  std::vector<Rule> interreduce(std::vector<Rule> const& rules,
                                Alphabet const&          alphabet) {
    std::vector<Rule> sorted;
    sorted.reserve(rules.size());
    for (auto const& r : rules) {
      sorted.push_back(make_rule(r.id, r.lhs, r.rhs, alphabet));
    }
    std::stable_sort(sorted.begin(), sorted.end(), [&](Rule const& x, Rule const& y) {
      return canonical_less(x, y, alphabet);
    });
    CompletionCaps caps;
    caps.max_word_len = static_cast<std::size_t>(-1);
    caps.max_rules    = static_cast<std::size_t>(-1);
    Engine engine(alphabet, caps, false);
    for (auto const& r : sorted) {
      engine.push(Equation{r.lhs, r.rhs, DerivationRecord::Origin::initial, r.id,
                           r.id, Ambiguity::Kind::intersection, {}});
      engine.drain();
    }
    auto out = engine.system().canonical_rules();
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i].id = static_cast<rule_id>(i);
    }
    return out;
  }

  std::vector<Chain> admissible_chains(Rule const& f, Rule const& g, Rule const& h) {
    std::vector<Chain> out;
    auto const&        f1 = f.lhs;
    auto const&        g1 = g.lhs;
    auto const&        h1 = h.lhs;
    for (std::size_t v1 = 1; v1 < std::min(f1.size(), g1.size()); ++v1) {
      if (!std::equal(f1.end() - static_cast<std::ptrdiff_t>(v1), f1.end(), g1.begin())) {
        continue;
      }
      for (std::size_t v2 = 1; v2 < std::min(g1.size(), h1.size()); ++v2) {
        if (g1.size() - v2 < v1) {
          break;
        }
        if (std::equal(g1.end() - static_cast<std::ptrdiff_t>(v2), g1.end(), h1.begin())) {
          out.push_back({v1, v2});
        }
      }
    }
    return out;
  }

  bool chained_composition_check(Rule const&          f,
                                 Rule const&          g,
                                 Rule const&          h,
                                 Chain                chain,
                                 RewriteSystem const& sys) {
    auto const& f1 = f.lhs;
    auto const& g1 = g.lhs;
    auto const& h1 = h.lhs;
    std::size_t v1 = chain.first_overlap;
    std::size_t v2 = chain.second_overlap;
    if (v1 == 0 || v1 >= f1.size() || v1 >= g1.size()
        || !std::equal(f1.end() - static_cast<std::ptrdiff_t>(v1), f1.end(), g1.begin())) {
      throw PreconditionError("f and g do not overlap in the given length");
    }
    if (v2 == 0 || v2 >= g1.size() || v2 >= h1.size()
        || !std::equal(g1.end() - static_cast<std::ptrdiff_t>(v2), g1.end(), h1.begin())) {
      throw PreconditionError("g and h do not overlap in the given length");
    }
    if (g1.size() - v2 < v1) {
      throw PreconditionError("margin condition a2 = v1·ā2 fails");
    }
    auto sub = [](word_type const& w, std::size_t b, std::size_t e) {
      return word_type(w.begin() + static_cast<std::ptrdiff_t>(b),
                       w.begin() + static_cast<std::ptrdiff_t>(e));
    };
    word_type a1      = sub(f1, 0, f1.size() - v1);
    word_type b1      = sub(g1, v1, g1.size());
    word_type a2_tail = sub(g1, v1, g1.size() - v2);
    word_type b2      = sub(h1, v2, h1.size());
    if (sys.normal_form(concat({a1, g.rhs})) != sys.normal_form(concat({f.rhs, b1}))) {
      throw PreconditionError("<f;g> is not trivial in the ambient system");
    }
    return sys.normal_form(concat({a1, g.rhs, b2}))
           == sys.normal_form(concat({f.rhs, a2_tail, h.rhs}));
  }

}  // namespace coxgs
