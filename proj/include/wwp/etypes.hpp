// Positive existential types and the embedding dichotomy.
//
// The positive existential formulas searched here are the systems
//   phi_t(x-bar) = exists y-bar (psi(y-bar) and AND_i x_i = t_i(y-bar)),
// one per term tuple t. phi_t holds at a tuple b exactly when t lies in
// T(b), so a self-map f with phi_t true at f(a-bar) and false at a-bar is
// not an exists-plus embedding.

#ifndef WWP_ETYPES_HPP_
#define WWP_ETYPES_HPP_

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "wwp/morphisms.hpp"
#include "wwp/scott.hpp"

namespace wwp {

  struct ExistsPlusViolation {
    TermTuple  terms;
    WordTuple  witness;     // y-bar solving phi_t at f(a-bar)
    FormulaDoc formula;     // phi_t
    std::string refutation; // "exhaustive" or "orbit-decider"
  };

  struct NoViolation {
    std::uint64_t depth = 0;  // term tuples examined
  };

  // How phi_t is refuted at a-bar: exhaustively over the relator-satisfying
  // tuples of a finite group, otherwise by deciding whether a-bar ->
  // t(a-bar) is an automorphism. Empty when neither is available.
  std::optional<std::string> refute_at_generators(TermTuple const& t, Backend const& b);

  // phi_t as a formula in free variables x1..xn and bound y1..yn.
  FormulaDoc exists_plus_formula(TermTuple const& t, Presentation const& p);

  // Term tuples in enumeration order up to budget.term_cap; for each, a
  // solution at f(a-bar) among the first budget.witness_cap witnesses, then
  // an exact refutation at a-bar.
  std::variant<NoViolation, ExistsPlusViolation> exists_plus_probe(Endomorphism const& e,
                                                                   Budget const&       budget);

  // Both sides re-checked with the word oracle and an independent refutation.
  bool recheck_violation(Endomorphism const& e, ExistsPlusViolation const& v);

  struct ConsistentWithAut {
    Budget budget;
  };

  struct RefutedByTheta {
    ThetaViolation      violation;
    ExistsPlusViolation converted;
  };

  // Evaluates the Theta prefix at f(a-bar). A falsified conjunct t with
  // witness c gives phi_t true at f(a-bar) via c; t is in T-hat(a-bar), so
  // phi_t fails at a-bar. Throws NoOrbitDecider.
  std::variant<ConsistentWithAut, RefutedByTheta> theta_check_embedding(Endomorphism const& e,
                                                                        Budget const& budget,
                                                                        ThetaIndex* index = nullptr);

  ////////////////////////////////////////////////////////////////////////
  // Dichotomy probe
  ////////////////////////////////////////////////////////////////////////

  enum class Dichotomy {
    Refuted,       // Theta fails at f(a-bar): not an exists-plus embedding
    Automorphism,  // f(a-bar) is in the orbit of a-bar
    Failure        // neither: contradicts the dichotomy at this budget
  };

  char const* to_string(Dichotomy d);

  struct DichotomyCase {
    WordTuple images;
    Dichotomy outcome;
    std::string detail;
  };

  struct DichotomyReport {
    std::uint64_t              checked      = 0;
    std::uint64_t              refuted      = 0;
    std::uint64_t              automorphisms = 0;
    std::vector<DichotomyCase> failures;
    std::vector<DichotomyCase> cases;  // every case, in input order
  };

  // Needs a Hopfian backend with an orbit decider (NoOrbitDecider
  // otherwise). A refutation whose converted violation does not re-check, or
  // a refuted automorphism, also counts as a failure.
  DichotomyReport strongly_defined_probe(std::vector<Endomorphism> const& endos,
                                         Budget const& budget, ThetaIndex* index = nullptr);

  // Finite backends: every relator-satisfying image tuple.
  std::vector<Endomorphism> all_endomorphisms(BackendPtr const& b);

  // Images drawn uniformly by length in [0, length_cap], then letter by
  // letter among the reduced continuations; tuples violating the relators
  // are redrawn.
  std::vector<Endomorphism> sample_endomorphisms(BackendPtr const& b, std::size_t count,
                                                 std::size_t length_cap, std::uint64_t seed);

  // A Theta budget reaching the conjunct t = f(a-bar) at witness a-bar for
  // every image tuple of components no longer than length_cap.
  Budget dichotomy_budget(Backend const& b, std::size_t length_cap);

}  // namespace wwp

#endif  // WWP_ETYPES_HPP_
