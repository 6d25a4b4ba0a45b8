// Criterion 1: the T-set facts checked exhaustively on S3 and Z/6.

#include <cstdint>
#include <memory>
#include <set>

#include "report.hpp"
#include "wwp/acceptance.hpp"
#include "wwp/oracles.hpp"
#include "wwp/orbit.hpp"
#include "wwp/scott.hpp"
#include "wwp/tsets.hpp"

namespace wwp::acceptance {

  namespace {

    using oracle::Letters;

    struct FiniteCase {
      std::string          label;
      Presentation         presentation;
      oracle::PermGroup    group;
      std::vector<Letters> relators;
    };

    std::vector<FiniteCase> finite_cases() {
      return {
          // a = (0 1), b = (0 1 2)
          {"S3", s3_presentation(), oracle::PermGroup({{1, 0, 2}, {1, 2, 0}}),
           {{1, 1}, {2, 2, 2}, {1, 2, 1, 2}}},
          // a = +3, b = +2 on Z/6
          {"Z/6", z6_presentation(),
           oracle::PermGroup({{3, 4, 5, 0, 1, 2}, {2, 3, 4, 5, 0, 1}}),
           {{1, 1}, {2, 2, 2}, {1, 2, -1, -2}}},
      };
    }

    // Bit b1 * |A| + b2 is set when (b1, b2) = t(c) for some relator-satisfying c.
    using Mask = std::uint64_t;

    class FiniteModel {
     public:
      explicit FiniteModel(FiniteCase const& fc) : _g(fc.group), _rels(fc.relators) {
        auto const n = static_cast<int>(_g.order());
        for (int u = 0; u < n; ++u) {
          for (int v = 0; v < n; ++v) {
            if (satisfies({u, v})) {
              _models.push_back({u, v});
              if (_g.generated_order({u, v}) == _g.order()) {
                _auts.insert(pair(u, v));
              }
            }
          }
        }
      }

      oracle::PermGroup const& group() const {
        return _g;
      }
      int pair(int u, int v) const {
        return u * static_cast<int>(_g.order()) + v;
      }
      int pairs() const {
        return static_cast<int>(_g.order() * _g.order());
      }
      int first(int p) const {
        return p / static_cast<int>(_g.order());
      }
      int second(int p) const {
        return p % static_cast<int>(_g.order());
      }
      int generators() const {
        return pair(_g.gen(0), _g.gen(1));
      }
      bool satisfies(std::vector<int> const& c) const {
        for (auto const& r : _rels) {
          if (_g.eval(r, c) != _g.identity()) {
            return false;
          }
        }
        return true;
      }
      bool is_model(int p) const {
        return satisfies({first(p), second(p)});
      }
      std::vector<std::vector<int>> const& models() const {
        return _models;
      }
      bool automorphic(int p) const {
        return _auts.count(p) != 0;
      }
      std::size_t automorphism_count() const {
        return _auts.size();
      }

      Mask mask(Letters const& t1, Letters const& t2) const {
        Mask m = 0;
        for (auto const& c : _models) {
          m |= Mask{1} << pair(_g.eval(t1, c), _g.eval(t2, c));
        }
        return m;
      }
      Mask mask(TermTuple const& t) const {
        return mask(oracle::letters_of(t.components[0]), oracle::letters_of(t.components[1]));
      }

      // alpha in End(A) with alpha(b) = c.
      bool endo_maps(int b, int c) const {
        auto const& s1 = _g.spelling(first(b));
        auto const& s2 = _g.spelling(second(b));
        for (auto const& m : _models) {
          if (pair(_g.eval(s1, m), _g.eval(s2, m)) == c) {
            return true;
          }
        }
        return false;
      }

      WordTuple words(int p) const {
        return {oracle::word_of(_g.spelling(first(p))), oracle::word_of(_g.spelling(second(p)))};
      }
      int element_pair(WordTuple const& t) const {
        std::vector<int> gens{_g.gen(0), _g.gen(1)};
        return pair(_g.eval(t[0], gens), _g.eval(t[1], gens));
      }

     private:
      oracle::PermGroup             _g;
      std::vector<Letters>          _rels;
      std::vector<std::vector<int>> _models;
      std::set<int>                 _auts;
    };

    bool has(Mask m, int p) {
      return ((m >> p) & 1U) != 0;
    }

    std::string show(WordTuple const& t) {
      return format_word_tuple(t, {"a", "b"});
    }

  }  // namespace

  CriterionResult finite_exhaustion(Options const& o) {
    Stopwatch clock;
    Faults    f;
    auto const words = oracle::reduced_words(3, 2);
    std::uint64_t checks = 0;

    for (auto const& fc : finite_cases()) {
      FiniteModel model(fc);
      auto const& g = model.group();
      auto lib = std::make_shared<CosetTableBackend>(fc.presentation, 1000);

      f.check(lib->order() == g.order() && g.order() == 6, fc.label + ": order differs");
      f.check(g.generated_order({g.gen(0), g.gen(1)}) == g.order(),
              fc.label + ": generators do not generate");
      f.check(model.is_model(model.generators()), fc.label + ": relators fail at a-bar");
      std::vector<Letters> lib_rels;
      for (auto const& r : lib->presentation().relators()) {
        lib_rels.push_back(oracle::letters_of(r));
      }
      f.check(lib_rels == fc.relators, fc.label + ": presentation relators differ");

      // Term family: pairs of reduced words of length <= 3 in two variables.
      struct Term {
        TermTuple tuple;
        Mask      mask;
      };
      std::vector<Term> family;
      for (auto const& u : words) {
        for (auto const& v : words) {
          family.push_back({make_term_tuple(2, {oracle::word_of(u), oracle::word_of(v)}),
                            model.mask(u, v)});
        }
      }
      auto const a = model.generators();
      auto const n = model.pairs();

      // A budget whose term prefix contains the family and whose witnesses
      // cover A^2.
      Budget budget;
      {
        TermCursor    cursor(2, 2);
        std::uint64_t cap = 0;
        while (auto t = cursor.next()) {
          if (total_length(t->components) > 6) {
            break;
          }
          ++cap;
        }
        budget = Budget{cap, static_cast<std::uint64_t>(n), cap * n, 4096};
      }

      // Check: T(b) <= T(c) iff some endomorphism maps b to c.
      for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) {
          bool included = true;
          for (auto const& t : family) {
            if (has(t.mask, b) && !has(t.mask, c)) {
              included = false;
              break;
            }
          }
          auto const endo = model.endo_maps(b, c);
          f.check(included == endo, fc.label + ": inclusion vs endomorphism at "
                                        + show(model.words(b)) + " / " + show(model.words(c)));
          auto r = inclusion_probe(model.words(b), model.words(c), lib, budget);
          if (endo) {
            f.check(r.endo_found && model.element_pair(r.endo_found->apply(model.words(b))) == c,
                    fc.label + ": inclusion_probe missed an endomorphism");
          } else if (!r.counterexample) {
            f.fail(fc.label + ": inclusion_probe found no separating term");
          } else {
            auto m = model.mask(r.counterexample->first);
            f.check(has(m, b) && !has(m, c), fc.label + ": separating term is wrong");
          }
          checks += 2;
        }
      }

      // Check: T(a) = T(b) iff b is in the orbit of a; also Theta(b) iff in
      // the orbit, by brute force and by the library evaluator.
      ThetaIndex index(lib);
      auto const theta = build_theta_prefix(lib, budget, &index);
      for (int b = 0; b < n; ++b) {
        bool equal = true;
        bool theta_holds = model.is_model(b);
        for (auto const& t : family) {
          if (has(t.mask, a) != has(t.mask, b)) {
            equal = false;
          }
          if (!has(t.mask, a) && has(t.mask, b)) {
            theta_holds = false;
          }
        }
        auto const aut     = model.automorphic(b);
        auto const verdict = orbit_decide(*lib, model.words(b));
        auto const label   = fc.label + " at " + show(model.words(b));
        f.check(equal == aut, label + ": T-set equality vs automorphism");
        f.check(theta_holds == aut, label + ": brute-force Theta vs automorphism");
        f.check((verdict.decision == Decision::InOrbit) == aut, label + ": orbit_decide");
        f.check(recheck(*lib, model.words(b), verdict), label + ": orbit certificate");
        auto e = evaluate_bounded(theta, model.words(b), lib, budget, &index);
        if (aut) {
          f.check(e.outcome == Outcome::HoldsSoFar, label + ": Theta falsified on the orbit");
        } else {
          f.check(e.outcome == Outcome::Falsified
                      && recheck_falsification(theta, model.words(b), *lib, e),
                  label + ": Theta not falsified off the orbit");
        }
        checks += 5;
      }

      // Check: t in T(a) iff a -> t(a) is an automorphism.
      std::vector<int> gens{g.gen(0), g.gen(1)};
      for (auto const& t : family) {
        auto const image = model.pair(g.eval(t.tuple.components[0], gens),
                                      g.eval(t.tuple.components[1], gens));
        auto const in_t  = has(t.mask, a);
        f.check(in_t == model.automorphic(image),
                fc.label + ": T(a-bar) vs automorphisms at " + format_term_tuple(t.tuple));
        f.check(member_T_decide(t.tuple, *lib) == in_t,
                fc.label + ": member_T_decide at " + format_term_tuple(t.tuple));
        checks += 2;
      }

      // member_T_semi against the brute-force T-sets.
      for (auto const& t : family) {
        for (int b = 0; b < n; ++b) {
          auto w = member_T_semi(t.tuple, model.words(b), *lib, budget);
          if (!w) {
            f.check(!has(t.mask, b), fc.label + ": member_T_semi missed "
                                         + format_term_tuple(t.tuple));
            continue;
          }
          auto const c = model.element_pair(*w);
          std::vector<int> cv{model.first(c), model.second(c)};
          f.check(has(t.mask, b) && model.satisfies(cv)
                      && model.pair(g.eval(t.tuple.components[0], cv),
                                    g.eval(t.tuple.components[1], cv))
                             == b,
                  fc.label + ": member_T_semi witness is wrong");
        }
        checks += static_cast<std::uint64_t>(n);
      }

      // The T-hat stream against the brute-force complement.
      {
        std::vector<TermTuple> expected;
        TermCursor             cursor(2, 2);
        for (std::uint64_t i = 0; i < budget.term_cap; ++i) {
          auto t = cursor.next();
          if (!has(model.mask(*t), a)) {
            expected.push_back(*t);
          }
        }
        f.check(enumerate_That(lib, budget) == expected, fc.label + ": enumerate_That");
        ++checks;
      }
      note(o, fc.label + ": " + std::to_string(model.models().size()) + " endomorphisms, "
                  + std::to_string(model.automorphism_count()) + " automorphisms");
    }
    return finish(1, "finite-group T-set exhaustion", f,
                  std::to_string(checks) + " checks on S3 and Z/6", clock, 60);
  }

}  // namespace wwp::acceptance
