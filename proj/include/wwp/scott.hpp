// Infinitary formulas over the group signature, the orbit formula Theta and
// the Scott sentence skeleton built from it.
//
// Terms are words whose generator indices are variable ids. Formulas are
// immutable trees with shared subtrees. An infinitary connective is a Stream:
// the prefix materialised so far plus the cursor at which enumeration
// resumes. Extending a stream means building a new formula at a larger
// budget; the old items are a prefix of the new ones.

#ifndef WWP_SCOTT_HPP_
#define WWP_SCOTT_HPP_

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wwp/backend.hpp"
#include "wwp/budget.hpp"
#include "wwp/tsets.hpp"

namespace wwp {

  using VarId = std::uint32_t;

  struct ComplexityTag {
    enum class Class { Sigma, Pi, DSigma };

    Class       cls        = Class::Pi;
    std::size_t level      = 0;
    bool        computable = true;

    // "Pi0", "Sigma1", "d-Sigma2", ...
    std::string to_string() const;

    friend bool operator==(ComplexityTag const&, ComplexityTag const&) = default;
  };

  struct Formula;
  using FormulaPtr = std::shared_ptr<Formula const>;

  struct TermEq {
    Word lhs;
    Word rhs;
  };

  enum class StreamSource {
    ThetaConjuncts,  // one conjunct per member of T-hat(a-bar)
    SpanDisjuncts    // z = w(x-bar), one per word w
  };

  struct Stream {
    StreamSource            source;
    std::vector<VarId>      subject;    // the x-bar the items speak about
    std::vector<FormulaPtr> items;
    std::vector<TermTuple>  terms;      // the term tuple behind each item
    std::uint64_t           cursor = 0; // term tuples scanned
    ComplexityTag           item_tag;   // tag of every item, present or future
  };

  struct Junction {
    bool                    conjunction = true;
    std::vector<FormulaPtr> items;   // finite part
    std::shared_ptr<Stream const> stream;  // infinitary part, if any
  };

  struct Negation {
    FormulaPtr body;
  };

  struct Quantified {
    bool               exists = true;
    std::vector<VarId> vars;
    FormulaPtr         body;
  };

  struct Formula {
    std::variant<TermEq, Junction, Negation, Quantified> node;
  };

  FormulaPtr make_eq(Word lhs, Word rhs);
  FormulaPtr make_and(std::vector<FormulaPtr> items, std::shared_ptr<Stream const> stream = nullptr);
  FormulaPtr make_or(std::vector<FormulaPtr> items, std::shared_ptr<Stream const> stream = nullptr);
  FormulaPtr make_not(FormulaPtr body);
  FormulaPtr make_exists(std::vector<VarId> vars, FormulaPtr body);
  FormulaPtr make_forall(std::vector<VarId> vars, FormulaPtr body);

  // A formula with its variable table.
  struct FormulaDoc {
    std::string              kind;  // "theta", "sentence", ...
    std::vector<std::string> var_names;
    std::vector<VarId>       free;
    FormulaPtr               root;
  };

  // Throws MalformedFormula on unknown variables, variables bound twice on a
  // path, bound variables that are also free, or empty quantifier lists.
  void validate(FormulaDoc const& doc);

  // Least tag by the closure rules: quantifier-free finitary formulas are
  // Pi0 (= Sigma0); exists over Pi_n gives Sigma_{n+1}; c.e. disjunctions of
  // Sigma_n are Sigma_n; dually for Pi; a conjunction of a Sigma_n and a Pi_n
  // formula is d-Sigma_n. Streams contribute their declared item tag, so
  // extending them never changes the result.
  ComplexityTag classify_formula(FormulaDoc const& doc);
  ComplexityTag classify_formula(FormulaPtr const& f);

  ////////////////////////////////////////////////////////////////////////
  // Theta and the Scott sentence
  ////////////////////////////////////////////////////////////////////////

  // psi(x-bar) and, for each t in T-hat(a-bar) among the first
  // budget.term_cap term tuples,
  //   forall y-bar not(psi(y-bar) and AND_i x_i = t_i(y-bar)).
  // Free variables x1..xn (ids 0..n-1), bound y1..yn (ids n..2n-1). Throws
  // NoOrbitDecider.
  FormulaDoc build_theta_prefix(BackendPtr const& b, Budget const& budget,
                                ThetaIndex* index = nullptr);

  // (exists x-bar Theta(x-bar)) and
  //   (forall x-bar forall z (not Theta(x-bar) or OR_w z = w(x-bar))),
  // with w over the first budget.term_cap words.
  FormulaDoc emit_scott_sentence(BackendPtr const& b, Budget const& budget,
                                 ThetaIndex* index = nullptr);

  ////////////////////////////////////////////////////////////////////////
  // Output
  ////////////////////////////////////////////////////////////////////////

  // (forall (y1 y2) (not (and (= y1^2 1) ... (= x1 y1*y2))))
  // Streams print as (and* :cursor N item ...) and (or* :cursor N item ...).
  std::string to_sexp(FormulaDoc const& doc);

  // JSON document with schema_version, tag, variables, free and the AST.
  // Words are lists of [variable, exponent sign] pairs.
  std::string to_json(FormulaDoc const& doc, int indent = 2);

  ////////////////////////////////////////////////////////////////////////
  // Bounded evaluation
  ////////////////////////////////////////////////////////////////////////

  enum class Outcome { HoldsSoFar, Falsified, Unknown };

  char const* to_string(Outcome o);

  struct Evaluation {
    Outcome outcome = Outcome::HoldsSoFar;
    // HoldsSoFar with exact set: every quantifier and stream was exhausted.
    bool exact = false;
    // Falsified: child indices from the root to the refuted universal
    // subformula, counting finite items before stream items, and the values
    // of its bound variables.
    std::vector<std::size_t> path;
    WordTuple                witness;
    // Falsified inside a Theta stream.
    std::optional<ThetaViolation> violation;
  };

  // Universally quantified blocks try witness tuples in WitnessCursor order
  // up to budget.witness_cap; Theta streams are searched witness-major
  // through the index. Falsified is sound. HoldsSoFar means that nothing
  // was falsified; Unknown that an existential search came up empty.
  // assignment[i] is the value of doc.free[i]. Throws UnboundVariable.
  Evaluation evaluate_bounded(FormulaDoc const& doc, WordTuple const& assignment,
                              BackendPtr const& b, Budget const& budget,
                              ThetaIndex* index = nullptr);

  // Re-checks a Falsified result by substituting the witness.
  bool recheck_falsification(FormulaDoc const& doc, WordTuple const& assignment,
                             Backend const& b, Evaluation const& e);

}  // namespace wwp

#endif  // WWP_SCOTT_HPP_
