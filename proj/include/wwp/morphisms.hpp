// Endomorphisms of a finitely presented group given by generator images.

#ifndef WWP_MORPHISMS_HPP_
#define WWP_MORPHISMS_HPP_

#include <optional>

#include "wwp/backend.hpp"
#include "wwp/budget.hpp"

namespace wwp {

  class Endomorphism {
   public:
    // Validates the images against the relators of the backend's
    // presentation. Throws NotAHomomorphism when some relator fails.
    Endomorphism(BackendPtr b, WordTuple images);

    // No relator check; apply() refuses to run on the result.
    static Endomorphism unchecked(BackendPtr b, WordTuple images);

    static Endomorphism identity(BackendPtr b);

    Backend const& backend() const noexcept {
      return *_backend;
    }
    BackendPtr const& backend_ptr() const noexcept {
      return _backend;
    }
    Presentation const& presentation() const noexcept {
      return _backend->presentation();
    }
    // Normal forms of the images of the generators.
    WordTuple const& images() const noexcept {
      return _images;
    }
    bool validated() const noexcept {
      return _validated;
    }

    Word      apply(Word const& w) const;
    WordTuple apply(WordTuple const& t) const;

    // (*this) after (inner): x -> this(inner(x)).
    Endomorphism after(Endomorphism const& inner) const;

    friend bool operator==(Endomorphism const& a, Endomorphism const& b) {
      return a._backend == b._backend && a._images == b._images;
    }

   private:
    Endomorphism(BackendPtr b, WordTuple images, bool validated);

    BackendPtr _backend;
    WordTuple  _images;
    bool       _validated;
  };

  Endomorphism endo_from_tuple(BackendPtr b, WordTuple images);

  // Searches the elements of A, read as words in the generators, for an
  // expression of each generator a_i as t_i(e(a-bar)). Examines at most
  // budget.term_cap elements per generator. The certificate satisfies
  // evaluate_terms(t, e.images()) == a-bar in A.
  std::optional<TermTuple> surjectivity_semi(Endomorphism const& e, Budget const& budget);

  // Searches for g with g(e(a_i)) = a_i for every i. The candidate built from
  // surjectivity_semi's terms is tried first, then the witness stream.
  std::optional<Endomorphism> left_inverse_semi(Endomorphism const& e, Budget const& budget);

  // Reads a word over the generators as a term in variables of the same index.
  TermTuple as_terms(WordTuple const& words, std::size_t arity);

}  // namespace wwp

#endif  // WWP_MORPHISMS_HPP_
