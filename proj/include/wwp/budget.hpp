// Budgets for the bounded searches and the witness stream they share.
//
// Every semi-procedure inspects a prefix of a fixed enumeration: term tuples
// in TermCursor order, element tuples in WitnessCursor order. A budget caps
// the length of each prefix, so raising any cap can only enlarge the set of
// candidates examined.

#ifndef WWP_BUDGET_HPP_
#define WWP_BUDGET_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "wwp/backend.hpp"

namespace wwp {

  struct Budget {
    std::uint64_t term_cap    = 4096;       // term tuples examined
    std::uint64_t witness_cap = 4096;        // element tuples examined
    std::uint64_t step_cap    = 4096 * 4096; // (term, witness) pairs examined
    std::uint64_t length_cap  = 4096;       // unreduced length of t(c) evaluated

    // term_cap = witness_cap = length_cap = n, step_cap = n * n.
    static Budget scalar(std::uint64_t n);

    friend bool operator==(Budget const&, Budget const&) = default;
  };

  // Componentwise order.
  bool covers(Budget const& larger, Budget const& smaller) noexcept;

  // Tuples of elements of a backend: the start tuple first, then every other
  // tuple of element indices ordered by (index sum, lexicographic). Finite
  // groups run out after |A|^n tuples.
  class WitnessCursor {
   public:
    WitnessCursor(Backend const& b, std::size_t n, std::optional<WordTuple> start = std::nullopt);

    std::optional<WordTuple> next();

    std::uint64_t position() const noexcept {
      return _position;
    }

   private:
    bool advance();

    ElementList                _elements;
    std::size_t                _n;
    std::optional<WordTuple>   _start;
    bool                       _start_done = false;
    std::uint64_t              _position   = 0;
    std::uint64_t              _sum        = 0;
    std::vector<std::uint64_t> _index;
    bool                       _fresh = true;
    std::optional<std::uint64_t> _bound;  // known number of elements
  };

}  // namespace wwp

#endif  // WWP_BUDGET_HPP_
