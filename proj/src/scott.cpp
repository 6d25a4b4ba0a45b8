#include "wwp/scott.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "json.hpp"
#include "wwp/error.hpp"

namespace wwp {

  std::string ComplexityTag::to_string() const {
    std::string out;
    switch (cls) {
      case Class::Sigma: out = "Sigma"; break;
      case Class::Pi: out = "Pi"; break;
      case Class::DSigma: out = "d-Sigma"; break;
    }
    return out + std::to_string(level);
  }

  FormulaPtr make_eq(Word lhs, Word rhs) {
    return std::make_shared<Formula const>(Formula{TermEq{std::move(lhs), std::move(rhs)}});
  }
  FormulaPtr make_and(std::vector<FormulaPtr> items, std::shared_ptr<Stream const> stream) {
    return std::make_shared<Formula const>(Formula{Junction{true, std::move(items), std::move(stream)}});
  }
  FormulaPtr make_or(std::vector<FormulaPtr> items, std::shared_ptr<Stream const> stream) {
    return std::make_shared<Formula const>(Formula{Junction{false, std::move(items), std::move(stream)}});
  }
  FormulaPtr make_not(FormulaPtr body) {
    return std::make_shared<Formula const>(Formula{Negation{std::move(body)}});
  }
  FormulaPtr make_exists(std::vector<VarId> vars, FormulaPtr body) {
    return std::make_shared<Formula const>(Formula{Quantified{true, std::move(vars), std::move(body)}});
  }
  FormulaPtr make_forall(std::vector<VarId> vars, FormulaPtr body) {
    return std::make_shared<Formula const>(Formula{Quantified{false, std::move(vars), std::move(body)}});
  }

  namespace {

    template <typename... Fs>
    struct overloaded : Fs... {
      using Fs::operator()...;
    };
    template <typename... Fs>
    overloaded(Fs...) -> overloaded<Fs...>;

    ////////////////////////////////////////////////////////////////////////
    // Validation
    ////////////////////////////////////////////////////////////////////////

    struct Validator {
      std::size_t      n_vars;
      std::set<VarId>  free;
      std::vector<int> bound;  // depth count per variable

      void check_var(VarId v) const {
        if (v >= n_vars) {
          throw MalformedFormula("variable id " + std::to_string(v) + " out of range");
        }
      }
      void check_word(Word const& w) const {
        for (auto l : w.letters()) {
          check_var(l.gen);
          if (!free.count(l.gen) && bound[l.gen] == 0) {
            throw MalformedFormula("variable id " + std::to_string(l.gen) + " is not in scope");
          }
        }
      }

      void walk(FormulaPtr const& f) {
        if (!f) {
          throw MalformedFormula("missing subformula");
        }
        std::visit(overloaded{
                       [&](TermEq const& e) {
                         check_word(e.lhs);
                         check_word(e.rhs);
                       },
                       [&](Junction const& j) {
                         for (auto const& item : j.items) {
                           walk(item);
                         }
                         if (j.stream) {
                           for (auto v : j.stream->subject) {
                             check_word(Word::generator(v));
                           }
                           for (auto const& item : j.stream->items) {
                             walk(item);
                           }
                         }
                       },
                       [&](Negation const& n) { walk(n.body); },
                       [&](Quantified const& q) {
                         if (q.vars.empty()) {
                           throw MalformedFormula("empty quantifier block");
                         }
                         for (auto v : q.vars) {
                           check_var(v);
                           if (free.count(v)) {
                             throw MalformedFormula("bound variable is also free");
                           }
                           if (bound[v]++ > 0) {
                             throw MalformedFormula("variable bound twice");
                           }
                         }
                         walk(q.body);
                         for (auto v : q.vars) {
                           --bound[v];
                         }
                       },
                   },
                   f->node);
      }
    };

    ////////////////////////////////////////////////////////////////////////
    // Classification
    ////////////////////////////////////////////////////////////////////////

    // A formula in Sigma_s and Pi_p, with s = p = 0 for quantifier-free.
    struct Levels {
      std::size_t s = 0;
      std::size_t p = 0;
    };

    Levels levels(ComplexityTag const& t) {
      if (t.level == 0 && t.cls != ComplexityTag::Class::DSigma) {
        return {0, 0};
      }
      switch (t.cls) {
        case ComplexityTag::Class::Sigma: return {t.level, t.level + 1};
        case ComplexityTag::Class::Pi: return {t.level + 1, t.level};
        default: return {t.level + 1, t.level + 1};
      }
    }

    ComplexityTag tag_of(Levels l) {
      using C = ComplexityTag::Class;
      if (l.s == 0 && l.p == 0) {
        return {C::Pi, 0, true};
      }
      if (l.s < l.p) {
        return {C::Sigma, l.s, true};
      }
      if (l.p < l.s) {
        return {C::Pi, l.p, true};
      }
      return {C::DSigma, l.s - 1, true};
    }

    Levels sigma(std::size_t m) {
      return {m, m + 1};
    }
    Levels pi(std::size_t m) {
      return {m + 1, m};
    }

    Levels classify(FormulaPtr const& f) {
      return std::visit(
          overloaded{
              [](TermEq const&) { return Levels{}; },
              [](Junction const& j) {
                Levels out;
                for (auto const& item : j.items) {
                  auto l = classify(item);
                  out    = {std::max(out.s, l.s), std::max(out.p, l.p)};
                }
                if (j.stream) {
                  auto item = levels(j.stream->item_tag);
                  auto l    = j.conjunction ? pi(std::max<std::size_t>(item.p, 1))
                                            : sigma(std::max<std::size_t>(item.s, 1));
                  out = {std::max(out.s, l.s), std::max(out.p, l.p)};
                }
                // A disjunction of a Sigma_n and a Pi_n formula is only Sigma_{n+1}.
                if (!j.conjunction && out.s == out.p && out.s > 0) {
                  out = sigma(out.s);
                }
                return out;
              },
              [](Negation const& n) {
                auto l = classify(n.body);
                if (l.s == l.p && l.s > 0) {
                  return sigma(l.s);
                }
                return Levels{l.p, l.s};
              },
              [](Quantified const& q) {
                auto l = classify(q.body);
                if (q.exists) {
                  return sigma(std::min(std::max<std::size_t>(l.s, 1), l.p + 1));
                }
                return pi(std::min(std::max<std::size_t>(l.p, 1), l.s + 1));
              },
          },
          f->node);
    }

    ////////////////////////////////////////////////////////////////////////
    // Construction
    ////////////////////////////////////////////////////////////////////////

    WordTuple var_words(VarId first, std::size_t n) {
      WordTuple out;
      for (std::size_t i = 0; i < n; ++i) {
        out.push_back(Word::generator(static_cast<std::uint32_t>(first + i)));
      }
      return out;
    }

    std::vector<VarId> var_ids(VarId first, std::size_t n) {
      std::vector<VarId> out;
      for (std::size_t i = 0; i < n; ++i) {
        out.push_back(static_cast<VarId>(first + i));
      }
      return out;
    }

    std::vector<FormulaPtr> relator_equations(Presentation const& p, WordTuple const& vars) {
      std::vector<FormulaPtr> out;
      for (auto const& r : p.relators()) {
        out.push_back(make_eq(substitute(r, vars), Word()));
      }
      return out;
    }

    // Theta over free variables 0..n-1 with bound variables n..2n-1.
    FormulaPtr theta_formula(BackendPtr const& b, Budget const& budget, ThetaIndex& index) {
      auto const  n = b->rank();
      auto const& p = b->presentation();
      auto const  x = var_words(0, n);
      auto const  y = var_words(static_cast<VarId>(n), n);

      auto stream      = std::make_shared<Stream>();
      stream->source   = StreamSource::ThetaConjuncts;
      stream->subject  = var_ids(0, n);
      stream->cursor   = budget.term_cap;
      stream->item_tag = ComplexityTag{ComplexityTag::Class::Pi, 1, true};

      auto const count = index.conjunct_count(budget.term_cap);
      for (std::size_t i = 0; i < count; ++i) {
        auto const& t     = index.conjunct(i);
        auto        block = relator_equations(p, y);
        for (std::size_t j = 0; j < n; ++j) {
          block.push_back(make_eq(x[j], substitute(t.components[j], y)));
        }
        stream->items.push_back(
            make_forall(var_ids(static_cast<VarId>(n), n), make_not(make_and(std::move(block)))));
        stream->terms.push_back(t);
      }
      return make_and(relator_equations(p, x), std::move(stream));
    }

    std::vector<std::string> theta_names(std::size_t n) {
      auto names = variable_names(n, "x");
      auto ys    = variable_names(n, "y");
      names.insert(names.end(), ys.begin(), ys.end());
      return names;
    }

    ThetaIndex& index_for(BackendPtr const& b, ThetaIndex* index, std::optional<ThetaIndex>& local) {
      if (index == nullptr) {
        local.emplace(b);
        return *local;
      }
      if (&index->backend() != b.get()) {
        throw Error("theta index belongs to another backend");
      }
      return *index;
    }

    void require_decider(Backend const& b) {
      if (!b.capabilities().has_orbit_decider() || !b.capabilities().hopfian_certified) {
        throw NoOrbitDecider("theta needs a Hopfian backend with an orbit decider: " + b.describe());
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // S-expressions
    ////////////////////////////////////////////////////////////////////////

    class SexpWriter {
     public:
      explicit SexpWriter(std::vector<std::string> const& names) : _names(names) {}

      void write(FormulaPtr const& f, std::size_t depth) {
        std::visit(overloaded{
                       [&](TermEq const& e) {
                         _out << "(= " << format_word(e.lhs, _names) << ' '
                              << format_word(e.rhs, _names) << ')';
                       },
                       [&](Junction const& j) { write_junction(j, depth); },
                       [&](Negation const& n) {
                         _out << "(not ";
                         write(n.body, depth);
                         _out << ')';
                       },
                       [&](Quantified const& q) {
                         _out << (q.exists ? "(exists (" : "(forall (");
                         for (std::size_t i = 0; i < q.vars.size(); ++i) {
                           _out << (i ? " " : "") << _names[q.vars[i]];
                         }
                         _out << ") ";
                         write(q.body, depth);
                         _out << ')';
                       },
                   },
                   f->node);
      }

      std::string str() const {
        return _out.str();
      }
      std::ostringstream& out() {
        return _out;
      }

     private:
      static bool flat(Junction const& j) {
        return !j.stream && std::all_of(j.items.begin(), j.items.end(), [](auto const& f) {
                 return std::holds_alternative<TermEq>(f->node);
               });
      }

      void newline(std::size_t depth) {
        _out << '\n' << std::string(2 * depth, ' ');
      }

      void write_junction(Junction const& j, std::size_t depth) {
        char const* op = j.conjunction ? "and" : "or";
        if (flat(j)) {
          _out << '(' << op;
          for (auto const& item : j.items) {
            _out << ' ';
            write(item, depth);
          }
          _out << ')';
          return;
        }
        _out << '(' << op;
        for (auto const& item : j.items) {
          newline(depth + 1);
          write(item, depth + 1);
        }
        if (j.stream) {
          auto const& s = *j.stream;
          newline(depth + 1);
          _out << '(' << op << "* :source "
               << (s.source == StreamSource::ThetaConjuncts ? "theta" : "span") << " :cursor "
               << s.cursor << " :items " << s.items.size() << " :item-tag " << s.item_tag.to_string();
          for (auto const& item : s.items) {
            newline(depth + 2);
            write(item, depth + 2);
          }
          _out << ')';
        }
        _out << ')';
      }

      std::vector<std::string> const& _names;
      std::ostringstream              _out;
    };

    ////////////////////////////////////////////////////////////////////////
    // JSON
    ////////////////////////////////////////////////////////////////////////

    nlohmann::json word_json(Word const& w) {
      auto out = nlohmann::json::array();
      for (auto l : w.letters()) {
        out.push_back({l.gen, l.inverse ? -1 : 1});
      }
      return out;
    }

    nlohmann::json formula_json(FormulaPtr const& f) {
      return std::visit(
          overloaded{
              [](TermEq const& e) {
                return nlohmann::json{{"op", "eq"}, {"lhs", word_json(e.lhs)}, {"rhs", word_json(e.rhs)}};
              },
              [](Junction const& j) {
                nlohmann::json out{{"op", j.conjunction ? "and" : "or"}};
                auto           items = nlohmann::json::array();
                for (auto const& item : j.items) {
                  items.push_back(formula_json(item));
                }
                out["items"] = std::move(items);
                if (j.stream) {
                  auto const&    s = *j.stream;
                  nlohmann::json st{
                      {"source", s.source == StreamSource::ThetaConjuncts ? "theta" : "span"},
                      {"cursor", s.cursor},
                      {"subject", s.subject},
                      {"item_tag", s.item_tag.to_string()}};
                  auto sitems = nlohmann::json::array();
                  for (auto const& item : s.items) {
                    sitems.push_back(formula_json(item));
                  }
                  auto terms = nlohmann::json::array();
                  for (auto const& t : s.terms) {
                    auto comps = nlohmann::json::array();
                    for (auto const& w : t.components) {
                      comps.push_back(word_json(w));
                    }
                    terms.push_back({{"arity", t.arity_in}, {"components", std::move(comps)}});
                  }
                  st["items"]   = std::move(sitems);
                  st["terms"]   = std::move(terms);
                  out["stream"] = std::move(st);
                }
                return out;
              },
              [](Negation const& n) {
                return nlohmann::json{{"op", "not"}, {"body", formula_json(n.body)}};
              },
              [](Quantified const& q) {
                return nlohmann::json{
                    {"op", q.exists ? "exists" : "forall"}, {"vars", q.vars}, {"body", formula_json(q.body)}};
              },
          },
          f->node);
    }

    ////////////////////////////////////////////////////////////////////////
    // Evaluation
    ////////////////////////////////////////////////////////////////////////

    // Exact truth values plus the two ways a bounded search can run out.
    enum class Value { True, False, LeanTrue, LeanFalse };

    Value negate(Value v) {
      switch (v) {
        case Value::True: return Value::False;
        case Value::False: return Value::True;
        case Value::LeanTrue: return Value::LeanFalse;
        default: return Value::LeanTrue;
      }
    }

    // Running conjunction; a disjunction is handled by negating in and out.
    Value meet(Value a, Value b) {
      auto rank = [](Value v) {
        switch (v) {
          case Value::False: return 0;
          case Value::LeanFalse: return 1;
          case Value::LeanTrue: return 2;
          default: return 3;
        }
      };
      return rank(a) <= rank(b) ? a : b;
    }

    struct Result {
      Value                         value = Value::True;
      std::vector<std::size_t>      path;  // reversed while unwinding
      WordTuple                     witness;
      std::optional<ThetaViolation> violation;
    };

    class Evaluator {
     public:
      Evaluator(FormulaDoc const& doc, BackendPtr b, Budget const& budget, ThetaIndex* index)
          : _b(std::move(b)),
            _budget(budget),
            _index(index),
            _values(doc.var_names.size()),
            _bound(doc.var_names.size(), false) {}

      void bind(VarId v, Word w) {
        _values[v] = std::move(w);
        _bound[v]  = true;
      }

      Result eval(FormulaPtr const& f) {
        return std::visit(overloaded{
                              [&](TermEq const& e) { return eval_eq(e); },
                              [&](Junction const& j) { return eval_junction(j); },
                              [&](Negation const& n) {
                                auto r = eval(n.body);
                                return Result{negate(r.value), {}, {}, {}};
                              },
                              [&](Quantified const& q) { return eval_quantified(q); },
                          },
                          f->node);
      }

     private:
      Word value(Word const& w) const {
        for (auto l : w.letters()) {
          if (!_bound[l.gen]) {
            throw UnboundVariable("variable id " + std::to_string(l.gen) + " has no value");
          }
        }
        return substitute(w, _values);
      }

      Result eval_eq(TermEq const& e) {
        bool holds = _b->equal(value(e.lhs), value(e.rhs));
        return Result{holds ? Value::True : Value::False, {}, {}, {}};
      }

      Result eval_junction(Junction const& j) {
        // Disjunctions are evaluated as negated conjunctions of negations.
        auto   flip = [&](Value v) { return j.conjunction ? v : negate(v); };
        Result acc;
        auto   take = [&](Result r, std::size_t position) {
          auto v = flip(r.value);
          if (v == Value::False) {
            r.path.push_back(position);
            r.value = j.conjunction ? Value::False : Value::True;
            acc     = std::move(r);
            return true;
          }
          acc.value = meet(acc.value, v);
          return false;
        };
        for (std::size_t i = 0; i < j.items.size(); ++i) {
          if (take(eval(j.items[i]), i)) {
            return acc;
          }
        }
        if (j.stream) {
          auto const& s = *j.stream;
          if (j.conjunction && s.source == StreamSource::ThetaConjuncts) {
            if (auto r = eval_theta(s)) {
              r->path.push_back(j.items.size() + r->violation->conjunct);
              return *r;
            }
          } else {
            for (std::size_t i = 0; i < s.items.size(); ++i) {
              if (take(eval(s.items[i]), j.items.size() + i)) {
                return acc;
              }
            }
          }
          // The unexamined tail of the stream.
          acc.value = meet(acc.value, Value::LeanTrue);
        }
        acc.value = flip(acc.value);
        return acc;
      }

      std::optional<Result> eval_theta(Stream const& s) {
        std::optional<ThetaIndex> local;
        auto&                     index = index_for(_b, _index, local);
        if (index.conjunct_count(s.cursor) < s.items.size()
            || (!s.items.empty() && !(index.conjunct(s.items.size() - 1) == s.terms.back()))) {
          throw MalformedFormula("theta stream does not match the backend");
        }
        WordTuple target;
        for (auto v : s.subject) {
          target.push_back(value(Word::generator(v)));
        }
        auto v = index.find_violation(target, s.items.size(), _budget);
        if (!v) {
          return std::nullopt;
        }
        return Result{Value::False, {}, v->witness, v};
      }

      Result eval_quantified(Quantified const& q) {
        // exists is the dual of forall.
        auto          flip = [&](Value v) { return q.exists ? negate(v) : v; };
        Value         acc  = Value::True;
        WitnessCursor cursor(*_b, q.vars.size());
        bool          exhausted = false;
        for (std::uint64_t i = 0;; ++i) {
          if (i >= _budget.witness_cap) {
            break;
          }
          auto c = cursor.next();
          if (!c) {
            exhausted = true;
            break;
          }
          for (std::size_t k = 0; k < q.vars.size(); ++k) {
            bind(q.vars[k], (*c)[k]);
          }
          auto v = flip(eval(q.body).value);
          if (v == Value::False) {
            unbind(q.vars);
            return Result{flip(Value::False), {}, *c, {}};
          }
          acc = meet(acc, v);
        }
        unbind(q.vars);
        if (!exhausted) {
          acc = meet(acc, Value::LeanTrue);
        }
        return Result{flip(acc), {}, {}, {}};
      }

      void unbind(std::vector<VarId> const& vars) {
        for (auto v : vars) {
          _bound[v] = false;
        }
      }

      BackendPtr        _b;
      Budget            _budget;
      ThetaIndex*       _index;
      WordTuple         _values;
      std::vector<bool> _bound;
    };

    // Exact value of a quantifier-free formula.
    bool holds_qf(FormulaPtr const& f, WordTuple const& values, Backend const& b) {
      return std::visit(overloaded{
                            [&](TermEq const& e) {
                              return b.equal(substitute(e.lhs, values), substitute(e.rhs, values));
                            },
                            [&](Junction const& j) {
                              if (j.stream) {
                                throw MalformedFormula("stream inside a quantifier-free formula");
                              }
                              for (auto const& item : j.items) {
                                if (holds_qf(item, values, b) != j.conjunction) {
                                  return !j.conjunction;
                                }
                              }
                              return j.conjunction;
                            },
                            [&](Negation const& n) { return !holds_qf(n.body, values, b); },
                            [&](Quantified const&) -> bool {
                              throw MalformedFormula("quantifier inside a quantifier-free formula");
                            },
                        },
                        f->node);
    }

  }  // namespace

  void validate(FormulaDoc const& doc) {
    Validator v{doc.var_names.size(), {}, std::vector<int>(doc.var_names.size(), 0)};
    for (auto x : doc.free) {
      v.check_var(x);
      v.free.insert(x);
    }
    v.walk(doc.root);
  }

  ComplexityTag classify_formula(FormulaPtr const& f) {
    return tag_of(classify(f));
  }

  ComplexityTag classify_formula(FormulaDoc const& doc) {
    validate(doc);
    return classify_formula(doc.root);
  }

  FormulaDoc build_theta_prefix(BackendPtr const& b, Budget const& budget, ThetaIndex* index) {
    require_decider(*b);
    std::optional<ThetaIndex> local;
    auto&                     idx = index_for(b, index, local);
    auto const                n   = b->rank();
    return FormulaDoc{"theta", theta_names(n), var_ids(0, n), theta_formula(b, budget, idx)};
  }

  FormulaDoc emit_scott_sentence(BackendPtr const& b, Budget const& budget, ThetaIndex* index) {
    require_decider(*b);
    std::optional<ThetaIndex> local;
    auto&                     idx   = index_for(b, index, local);
    auto const                n     = b->rank();
    auto const                theta = theta_formula(b, budget, idx);
    auto const                z     = static_cast<VarId>(2 * n);

    auto span      = std::make_shared<Stream>();
    span->source   = StreamSource::SpanDisjuncts;
    span->subject  = var_ids(0, n);
    span->cursor   = budget.term_cap;
    span->item_tag = ComplexityTag{ComplexityTag::Class::Pi, 0, true};
    TermCursor words(1, n);
    for (std::uint64_t i = 0; i < budget.term_cap; ++i) {
      auto w = words.next();
      if (!w) {
        break;
      }
      span->items.push_back(make_eq(Word::generator(z), w->components[0]));
      span->terms.push_back(std::move(*w));
    }

    auto sigma_part = make_exists(var_ids(0, n), theta);
    auto all        = var_ids(0, n);
    all.push_back(z);
    auto pi_part = make_forall(std::move(all), make_or({make_not(theta)}, std::move(span)));

    auto names = theta_names(n);
    names.push_back("z");
    return FormulaDoc{"sentence", std::move(names), {}, make_and({sigma_part, pi_part})};
  }

  std::string to_sexp(FormulaDoc const& doc) {
    SexpWriter w(doc.var_names);
    w.out() << '(' << doc.kind << " :tag " << classify_formula(doc).to_string() << " :free (";
    for (std::size_t i = 0; i < doc.free.size(); ++i) {
      w.out() << (i ? " " : "") << doc.var_names[doc.free[i]];
    }
    w.out() << ")\n  ";
    w.write(doc.root, 1);
    w.out() << ")\n";
    return w.str();
  }

  std::string to_json(FormulaDoc const& doc, int indent) {
    nlohmann::json out{{"schema_version", 1},
                       {"kind", doc.kind},
                       {"tag", classify_formula(doc).to_string()},
                       {"variables", doc.var_names},
                       {"free", doc.free},
                       {"formula", formula_json(doc.root)}};
    return out.dump(indent) + "\n";
  }

  char const* to_string(Outcome o) {
    switch (o) {
      case Outcome::HoldsSoFar: return "HoldsSoFar";
      case Outcome::Falsified: return "Falsified";
      default: return "Unknown";
    }
  }

  Evaluation evaluate_bounded(FormulaDoc const& doc, WordTuple const& assignment,
                              BackendPtr const& b, Budget const& budget, ThetaIndex* index) {
    if (assignment.size() != doc.free.size()) {
      throw UnboundVariable("assignment has " + std::to_string(assignment.size()) + " values for "
                            + std::to_string(doc.free.size()) + " free variables");
    }
    validate(doc);
    Evaluator e(doc, b, budget, index);
    for (std::size_t i = 0; i < doc.free.size(); ++i) {
      e.bind(doc.free[i], b->normal_form(assignment[i]));
    }
    auto       r = e.eval(doc.root);
    Evaluation out;
    switch (r.value) {
      case Value::True:
        out.exact = true;
        break;
      case Value::LeanTrue:
        break;
      case Value::LeanFalse:
        out.outcome = Outcome::Unknown;
        break;
      case Value::False:
        out.outcome = Outcome::Falsified;
        out.path.assign(r.path.rbegin(), r.path.rend());
        out.witness   = std::move(r.witness);
        out.violation = std::move(r.violation);
        break;
    }
    return out;
  }

  bool recheck_falsification(FormulaDoc const& doc, WordTuple const& assignment, Backend const& b,
                             Evaluation const& e) {
    if (e.outcome != Outcome::Falsified || assignment.size() != doc.free.size()) {
      return false;
    }
    WordTuple values(doc.var_names.size());
    for (std::size_t i = 0; i < doc.free.size(); ++i) {
      values[doc.free[i]] = assignment[i];
    }
    FormulaPtr f = doc.root;
    for (auto step : e.path) {
      auto const* j = std::get_if<Junction>(&f->node);
      if (j == nullptr || !j->conjunction) {
        return false;
      }
      if (step < j->items.size()) {
        f = j->items[step];
      } else if (j->stream && step - j->items.size() < j->stream->items.size()) {
        f = j->stream->items[step - j->items.size()];
      } else {
        return false;
      }
    }
    if (std::holds_alternative<TermEq>(f->node)) {
      return !holds_qf(f, values, b);
    }
    auto const* q = std::get_if<Quantified>(&f->node);
    if (q == nullptr || q->exists || q->vars.size() != e.witness.size()) {
      return false;
    }
    for (std::size_t k = 0; k < q->vars.size(); ++k) {
      values[q->vars[k]] = e.witness[k];
    }
    return !holds_qf(q->body, values, b);
  }

}  // namespace wwp
