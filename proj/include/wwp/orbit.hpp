// The weak Whitehead problem: is a tuple b-bar in the Aut(A)-orbit of the
// generating tuple a-bar? Exact deciders per backend class, and the two
// semi-deciders that work for any Hopfian group with an orbit decider.

#ifndef WWP_ORBIT_HPP_
#define WWP_ORBIT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "wwp/backend.hpp"
#include "wwp/budget.hpp"

namespace wwp {

  class ThetaIndex;

  ////////////////////////////////////////////////////////////////////////
  // Exact integer matrices
  ////////////////////////////////////////////////////////////////////////

  class IntMatrix {
   public:
    IntMatrix(std::size_t rows, std::size_t cols);
    // Rows of equal positive length.
    explicit IntMatrix(std::vector<std::vector<BigInt>> rows);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }
    BigInt& operator()(std::size_t i, std::size_t j) {
      return _data[i * _cols + j];
    }
    BigInt const& operator()(std::size_t i, std::size_t j) const {
      return _data[i * _cols + j];
    }

    friend IntMatrix operator*(IntMatrix const& a, IntMatrix const& b);
    friend bool      operator==(IntMatrix const&, IntMatrix const&) = default;

   private:
    std::size_t         _rows;
    std::size_t         _cols;
    std::vector<BigInt> _data;
  };

  std::string format_matrix(IntMatrix const& m);

  // Rows separated by ';', entries by whitespace: "2 0; 0 1".
  IntMatrix parse_matrix(std::string_view text);

  struct HnfResult {
    IntMatrix hnf;        // upper triangular, positive pivots, reduced above
    IntMatrix transform;  // unimodular U with U * m == hnf
    BigInt    det;
  };

  // Hermite normal form by integer row operations. For a square matrix the
  // determinant is also computed by Bareiss elimination; a disagreement
  // throws std::logic_error.
  HnfResult hnf_and_det(IntMatrix const& m);

  BigInt bareiss_det(IntMatrix m);

  // Abelianised exponent matrix: row i holds the exponent sums of t[i].
  IntMatrix exponent_matrix(WordTuple const& t, std::size_t rank);

  ////////////////////////////////////////////////////////////////////////
  // Nielsen reduction
  ////////////////////////////////////////////////////////////////////////

  struct NielsenMove {
    enum class Kind { Product, Invert, Swap };
    Kind        kind = Kind::Product;
    std::size_t i    = 0;
    std::size_t j    = 0;
    bool        left = false;  // Product: w_j^sign * w_i instead of w_i * w_j^sign
    int         sign = 1;

    friend bool operator==(NielsenMove const&, NielsenMove const&) = default;
  };

  std::string format_move(NielsenMove const& m);

  struct NielsenResult {
    WordTuple                reduced;
    std::vector<NielsenMove> log;
    bool                     complete = true;  // false if the level search hit its cap
  };

  // Strictly length reducing moves, tie broken by the least (i, j, side,
  // sign) with right before left and + before -. When none applies, the
  // tuples of the same total length reachable by length preserving moves are
  // searched breadth first for one that admits a reduction. A result made of
  // single letters is finally sorted into x1, x2, ... by inversions and swaps.
  NielsenResult nielsen_reduce(WordTuple const& tuple, std::size_t level_cap = 200'000);

  // Applies a move log to any tuple of words.
  WordTuple replay(std::vector<NielsenMove> const& log, WordTuple tuple);

  ////////////////////////////////////////////////////////////////////////
  // Verdicts
  ////////////////////////////////////////////////////////////////////////

  enum class Decision { InOrbit, NotInOrbit, Unknown };

  char const* to_string(Decision d);

  // A Theta-conjunct t-bar in T-hat(a-bar) with witness c-bar such that
  // psi(c-bar) holds and t-bar(c-bar) = b-bar.
  struct ThetaViolation {
    std::size_t   conjunct = 0;  // position among the conjuncts
    TermTuple     terms;
    WordTuple     witness;
    std::uint64_t witness_position = 0;
  };

  struct OrbitVerdict {
    Decision    decision = Decision::Unknown;
    std::string method;
    // InOrbit: images of the generators under the inverse automorphism.
    std::optional<WordTuple> inverse_images;
    // Free groups.
    std::vector<NielsenMove> nielsen_log;
    std::optional<WordTuple> reduced;
    // Free and free abelian groups.
    std::optional<BigInt> determinant;
    // NotInOrbit because a relator fails at b-bar.
    std::optional<std::size_t> failed_relator;
    // NotInOrbit by exhausting a finite automorphism group.
    std::optional<std::size_t> automorphisms_checked;
    std::optional<ThetaViolation> violation;
    std::string                   note;
  };

  // Free group of rank n with the standard basis.
  OrbitVerdict is_basis_free(WordTuple const& tuple, std::size_t rank);

  OrbitVerdict abelian_orbit_decide(FreeAbelianBackend const& b, WordTuple const& tuple);

  // (r, s) -> (r^e, r^k s) with e = +-1 are exactly the automorphisms.
  OrbitVerdict dihedral_orbit_decide(WordTuple const& pair);

  OrbitVerdict finite_orbit_decide(CosetTableBackend const& b, WordTuple const& tuple);

  // Dispatch on the backend kind. Unknown only for rewriting backends
  // without a plugin. Throws ArityMismatch on a length mismatch.
  OrbitVerdict orbit_decide(Backend const& b, WordTuple const& tuple);

  // Independent re-check of the certificate carried by a verdict.
  bool recheck(Backend const& b, WordTuple const& tuple, OrbitVerdict const& v);

  // Index of the first relator of the presentation failing at the tuple.
  std::optional<std::size_t> failing_relator(Backend const& b, WordTuple const& tuple);

  ////////////////////////////////////////////////////////////////////////
  // Semi-deciders
  ////////////////////////////////////////////////////////////////////////

  struct SemiYes {
    TermTuple terms;  // a_i = t_i(b-bar)
    bool      conditional_on_hopfian = false;
  };

  // psi(b-bar) and expressing terms among the first budget.term_cap normal
  // forms read as terms. By Hopfianity this certifies membership.
  std::optional<SemiYes> orbit_semi_yes(Backend const& b, WordTuple const& tuple,
                                        Budget const& budget);

  struct SemiNo {
    std::optional<std::size_t>    failed_relator;
    std::optional<ThetaViolation> violation;
  };

  // Either a failing relator, or a Theta-conjunct among the first
  // budget.term_cap term tuples violated by a witness among the first
  // budget.witness_cap element tuples (witness-major order). An index may be
  // shared across calls on the same backend.
  std::optional<SemiNo> orbit_semi_no(BackendPtr const& b, WordTuple const& tuple,
                                      Budget const& budget, ThetaIndex* index = nullptr);

  // Round-robin of the two semi-deciders at budgets 2^0, 2^1, ...
  struct DovetailOrbit {
    Decision      decision = Decision::Unknown;
    std::uint64_t rounds   = 0;
  };
  DovetailOrbit orbit_dovetail(BackendPtr const& b, WordTuple const& tuple,
                               std::uint64_t max_rounds, ThetaIndex* index = nullptr);

  OrbitVerdict to_verdict(SemiYes const& y, Backend const& b);
  OrbitVerdict to_verdict(SemiNo const& n);

}  // namespace wwp

#endif  // WWP_ORBIT_HPP_
