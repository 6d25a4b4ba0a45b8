// Coset enumeration (HLT strategy: relator scanning, no lookahead).

#ifndef WWP_COSET_HPP_
#define WWP_COSET_HPP_

#include <cstdint>
#include <variant>
#include <vector>

#include "wwp/presentation.hpp"

namespace wwp {

  struct CosetTable {
    std::uint32_t n_cosets = 0;
    // action[g][c] is the coset c * g. Every row is a permutation.
    std::vector<std::vector<std::uint32_t>> action;
    // inverse_action[g][c] is c * g^-1.
    std::vector<std::vector<std::uint32_t>> inverse_action;

    std::uint32_t act(std::uint32_t coset, Letter l) const {
      return l.inverse ? inverse_action[l.gen][coset] : action[l.gen][coset];
    }
    std::uint32_t act(std::uint32_t coset, Word const& w) const;

    // Coset 0 * a_i for each generator.
    std::vector<std::uint32_t> generator_images() const;
  };

  struct CosetOverflow {
    std::uint64_t cosets_defined = 0;
  };

  std::variant<CosetTable, CosetOverflow> coset_enumerate(Presentation const& p,
                                                          WordTuple const&    subgroup_gens,
                                                          std::uint64_t       cap);

  // True iff every relator fixes every coset and all rows are permutations.
  bool is_closed_table(CosetTable const& t, Presentation const& p);

}  // namespace wwp

#endif  // WWP_COSET_HPP_
