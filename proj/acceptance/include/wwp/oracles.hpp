// Reference models written without the library's group code: explicit
// permutation groups, free reduction on signed integers, D-infinity as
// affine maps of the integers, cofactor determinants and the Nielsen
// reducedness conditions. The acceptance criteria compare the library
// against these.

#ifndef WWP_ORACLES_HPP_
#define WWP_ORACLES_HPP_

#include <array>
#include <cstdint>
#include <vector>

#include "wwp/word.hpp"

namespace wwp::oracle {

  // A letter is +(g+1) or -(g+1).
  using Letters = std::vector<int>;

  Letters letters_of(Word const& w);
  Word    word_of(Letters const& l);
  Letters reduce(Letters const& raw);
  Letters inverse(Letters const& w);
  Letters concat(Letters const& u, Letters const& v);

  // Reduced words of length at most max_length over k generators, shortest
  // first.
  std::vector<Letters> reduced_words(std::size_t max_length, int k);

  ////////////////////////////////////////////////////////////////////////
  // Permutation groups
  ////////////////////////////////////////////////////////////////////////

  class PermGroup {
   public:
    // Closes the generating permutations under composition.
    explicit PermGroup(std::vector<std::vector<int>> gens);

    std::size_t order() const noexcept {
      return _perms.size();
    }
    int identity() const noexcept {
      return 0;
    }
    int mul(int x, int y) const {
      return _mul[static_cast<std::size_t>(x) * order() + static_cast<std::size_t>(y)];
    }
    int inv(int x) const {
      return _inv[static_cast<std::size_t>(x)];
    }
    int gen(std::size_t i) const {
      return _gens[i];
    }
    std::size_t rank() const noexcept {
      return _gens.size();
    }

    // Letter g stands for values[g].
    int eval(Letters const& w, std::vector<int> const& values) const;
    int eval(Word const& w, std::vector<int> const& values) const;

    // A word in the generators for every element.
    Letters const& spelling(int x) const {
      return _spelling[static_cast<std::size_t>(x)];
    }

    // Size of the subgroup generated by the given elements.
    std::size_t generated_order(std::vector<int> const& elems) const;

   private:
    std::vector<std::vector<int>> _perms;
    std::vector<int>              _mul;
    std::vector<int>              _inv;
    std::vector<int>              _gens;
    std::vector<Letters>          _spelling;
  };

  ////////////////////////////////////////////////////////////////////////
  // D-infinity as x -> sign * x + shift
  ////////////////////////////////////////////////////////////////////////

  struct Affine {
    int       sign  = 1;
    long long shift = 0;

    friend bool operator==(Affine const&, Affine const&) = default;
  };

  // (f * g)(x) = f(g(x)).
  Affine compose(Affine const& f, Affine const& g);
  Affine invert(Affine const& f);
  // r = x + 1, s = -x.
  Affine eval_dihedral(Letters const& w, Affine const& r, Affine const& s);

  ////////////////////////////////////////////////////////////////////////
  // Integer matrices and free bases
  ////////////////////////////////////////////////////////////////////////

  long long cofactor_det(std::vector<std::vector<long long>> const& m);

  // Exponent sums of each generator.
  std::vector<long long> exponent_sums(Letters const& w, int k);

  // N0: no trivial entry. N1: |u v| >= |u|, |v| whenever u v != 1. N2:
  // |u v w| > |u| - |v| + |w| whenever u v != 1 and v w != 1; u, v, w range
  // over the entries and their inverses.
  bool nielsen_reduced(std::vector<Letters> const& tuple);

  // Every entry a single letter, each generator used once.
  bool signed_letter_permutation(std::vector<Letters> const& tuple, int k);

}  // namespace wwp::oracle

#endif  // WWP_ORACLES_HPP_
