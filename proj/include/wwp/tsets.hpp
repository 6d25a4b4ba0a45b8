// Term sets. For b-bar in A^n,
//   T(b-bar) = { t-bar : some c-bar with psi(c-bar) has t-bar(c-bar) = b-bar },
// and T-hat(a-bar) is the complement of T(a-bar) in Term^n.

#ifndef WWP_TSETS_HPP_
#define WWP_TSETS_HPP_

#include <functional>
#include <optional>
#include <unordered_map>
#include <variant>
#include <tuple>
#include <vector>

#include "wwp/backend.hpp"
#include "wwp/budget.hpp"
#include "wwp/morphisms.hpp"
#include "wwp/orbit.hpp"

namespace wwp {

  // A witness c-bar for t-bar in T(b-bar) among the first budget.witness_cap
  // tuples of the witness stream (which starts at a-bar).
  std::optional<WordTuple> member_T_semi(TermTuple const& t, WordTuple const& target,
                                         Backend const& b, Budget const& budget);

  // t-bar in T(a-bar) iff a-bar -> t-bar(a-bar) is an automorphism. Needs a
  // Hopfian backend with an orbit decider; throws NoOrbitDecider otherwise.
  bool member_T_decide(TermTuple const& t, Backend const& b);

  // Length of evaluate_terms(t, args) before free reduction.
  std::uint64_t unreduced_length(TermTuple const& t, WordTuple const& args);

  // Position of a term tuple in TermCursor order, when it fits in 64 bits.
  std::optional<std::uint64_t> term_index(TermTuple const& t);

  // T-hat(a-bar) in term enumeration order, extended on demand, together with
  // per-witness lookup tables for the witness-major search for violated
  // conjuncts. One owner at a time.
  class ThetaIndex {
   public:
    explicit ThetaIndex(BackendPtr b);

    Backend const& backend() const noexcept {
      return *_backend;
    }
    BackendPtr const& backend_ptr() const noexcept {
      return _backend;
    }

    // Number of conjuncts among the first term_cap term tuples.
    std::size_t conjunct_count(std::uint64_t term_cap);
    TermTuple const& conjunct(std::size_t i) const {
      return _members[i];
    }
    // Position of conjunct i in the term enumeration.
    std::uint64_t conjunct_term_index(std::size_t i) const {
      return _member_index[i];
    }

    // Witnesses are taken in stream order; for each one the conjuncts in
    // order. A pair counts one step and is evaluated only when the unreduced
    // length of t(c) is at most length_cap. The first violation is returned.
    std::optional<ThetaViolation> find_violation(WordTuple const& target,
                                                 std::size_t n_conjuncts,
                                                 Budget const& budget);

   private:
    void scan_to(std::uint64_t term_cap);
    // The witness at a raw stream position; nullopt once exhausted, or an
    // empty slot when psi fails there.
    bool witness(std::uint64_t position);

    // Hash of t(c) for each conjunct t, sorted by hash; hits are confirmed
    // by recomputation.
    struct Entry {
      std::size_t   hash;
      std::uint32_t conjunct;
      std::uint32_t cost;

      friend bool operator<(Entry const& a, Entry const& b) {
        return std::tie(a.hash, a.conjunct) < std::tie(b.hash, b.conjunct);
      }
    };
    struct Table {
      std::size_t        covered    = 0;
      std::uint64_t      length_cap = 0;
      std::vector<Entry> by_hash;
    };

    BackendPtr                              _backend;
    TermCursor                              _terms;
    std::uint64_t                           _scanned = 0;
    std::vector<TermTuple>                  _members;
    std::vector<std::uint64_t>              _member_index;
    WitnessCursor                           _witness_cursor;
    bool                                    _witnesses_done = false;
    std::vector<std::optional<WordTuple>>   _witnesses;
    std::vector<Table>                      _tables;
  };

  // Stream of T-hat(a-bar) among the first budget.term_cap term tuples.
  std::vector<TermTuple> enumerate_That(BackendPtr const& b, Budget const& budget,
                                        ThetaIndex* index = nullptr);

  struct InclusionReport {
    std::optional<Endomorphism> endo_found;  // alpha with alpha(b-bar) = c-bar
    // t-bar in T(b-bar) \ T(c-bar), with the witness for b-bar.
    std::optional<std::pair<TermTuple, WordTuple>> counterexample;
    std::uint64_t                                  rounds = 0;
  };

  // Round-robin of the search for alpha (over relator-satisfying tuples in
  // witness order) and, on finite backends, the search for a separating
  // term tuple.
  InclusionReport inclusion_probe(WordTuple const& b_tuple, WordTuple const& c_tuple,
                                  BackendPtr const& b, Budget const& budget);

  ////////////////////////////////////////////////////////////////////////
  // Dovetailing
  ////////////////////////////////////////////////////////////////////////

  // One step of a semi-procedure; returns true once it has landed.
  using Stepper = std::function<bool(std::uint64_t step)>;

  struct BudgetExhausted {
    std::uint64_t rounds = 0;
  };

  struct Landed {
    bool          value = false;  // true: semi_yes landed
    std::uint64_t round = 0;
  };

  // Runs both steppers once per round, yes first. Both landing in the same
  // round throws ContradictoryCertificates.
  std::variant<Landed, BudgetExhausted> dovetail_decide(Stepper const& semi_yes,
                                                        Stepper const& semi_no,
                                                        std::uint64_t  max_rounds);

}  // namespace wwp

#endif  // WWP_TSETS_HPP_
