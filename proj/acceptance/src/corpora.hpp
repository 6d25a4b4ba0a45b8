// Tuple families shared by several criteria.

#ifndef WWP_ACCEPTANCE_CORPORA_HPP_
#define WWP_ACCEPTANCE_CORPORA_HPP_

#include <string>
#include <vector>

#include "wwp/backend.hpp"
#include "wwp/oracles.hpp"

namespace wwp::acceptance {

  struct Corpus {
    std::string            label;
    BackendPtr             backend;
    std::vector<WordTuple> tuples;
  };

  // F2, pairs of reduced words of total length <= 5.
  Corpus free_corpus();

  // Z^n for n = 1..4.
  struct AbelianSample {
    std::size_t                         n = 0;
    std::vector<std::vector<long long>> matrix;
    bool                                unimodular = false;
  };
  std::vector<AbelianSample> abelian_samples();  // 1000 of each kind, seeded
  WordTuple                  matrix_tuple(std::vector<std::vector<long long>> const& m);
  std::vector<Corpus>        abelian_corpora();  // one per rank

  // D-infinity, all pairs of reduced words of length <= 4 over r, s.
  Corpus dihedral_corpus();

}  // namespace wwp::acceptance

#endif  // WWP_ACCEPTANCE_CORPORA_HPP_
