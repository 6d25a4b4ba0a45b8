#include "wwp/morphisms.hpp"

#include "wwp/error.hpp"

namespace wwp {

  Endomorphism::Endomorphism(BackendPtr b, WordTuple images, bool validated)
      : _backend(std::move(b)), _images(std::move(images)), _validated(validated) {
    if (!_backend) {
      throw Error("endomorphism needs a backend");
    }
    if (_images.size() != _backend->rank()) {
      throw ArityMismatch("expected " + std::to_string(_backend->rank()) + " images, got "
                          + std::to_string(_images.size()));
    }
  }

  Endomorphism::Endomorphism(BackendPtr b, WordTuple images)
      : Endomorphism(std::move(b), std::move(images), true) {
    if (!satisfies_relators(presentation(), *_backend, _images)) {
      throw NotAHomomorphism("images do not satisfy the relators of "
                             + format_presentation(presentation()));
    }
    _images = _backend->normal_forms(_images);
  }

  Endomorphism Endomorphism::unchecked(BackendPtr b, WordTuple images) {
    return Endomorphism(std::move(b), std::move(images), false);
  }

  Endomorphism Endomorphism::identity(BackendPtr b) {
    auto gens = b->presentation().generator_tuple();
    return Endomorphism(std::move(b), std::move(gens), true);
  }

  Word Endomorphism::apply(Word const& w) const {
    if (!_validated) {
      throw NotAHomomorphism("endomorphism was not validated");
    }
    return _backend->normal_form(substitute(w, _images));
  }

  WordTuple Endomorphism::apply(WordTuple const& t) const {
    WordTuple out;
    out.reserve(t.size());
    for (auto const& w : t) {
      out.push_back(apply(w));
    }
    return out;
  }

  Endomorphism Endomorphism::after(Endomorphism const& inner) const {
    if (inner._backend != _backend) {
      throw Error("endomorphisms over different backends");
    }
    return Endomorphism(_backend, apply(inner._images), _validated && inner._validated);
  }

  Endomorphism endo_from_tuple(BackendPtr b, WordTuple images) {
    return Endomorphism(std::move(b), std::move(images));
  }

  TermTuple as_terms(WordTuple const& words, std::size_t arity) {
    return make_term_tuple(arity, words);
  }

  std::optional<TermTuple> surjectivity_semi(Endomorphism const& e, Budget const& budget) {
    auto const& b    = e.backend();
    auto const  gens = e.presentation().generator_tuple();
    WordTuple   terms(gens.size());
    std::vector<bool> found(gens.size(), false);
    std::size_t       missing = gens.size();
    ElementCursor     cursor(b);
    for (std::uint64_t i = 0; i < budget.term_cap && missing > 0; ++i) {
      auto w = cursor.next();
      if (!w) {
        break;
      }
      auto image = e.apply(*w);
      for (std::size_t j = 0; j < gens.size(); ++j) {
        if (!found[j] && image == b.normal_form(gens[j])) {
          found[j] = true;
          terms[j] = *w;
          --missing;
        }
      }
    }
    if (missing > 0) {
      return std::nullopt;
    }
    auto t = as_terms(terms, gens.size());
    // Independent re-check of the certificate.
    auto back = evaluate_terms(t, e.images());
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (!b.equal(back[j], gens[j])) {
        throw std::logic_error("surjectivity certificate failed to re-check");
      }
    }
    return t;
  }

  namespace {
    bool fixes_generators(Endomorphism const& composite) {
      auto const& b    = composite.backend();
      auto const  gens = composite.presentation().generator_tuple();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!b.equal(composite.images()[i], gens[i])) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  std::optional<Endomorphism> left_inverse_semi(Endomorphism const& e, Budget const& budget) {
    auto const& b    = e.backend();
    auto const& p    = e.presentation();
    auto const  gens = p.generator_tuple();
    if (auto t = surjectivity_semi(e, budget)) {
      auto candidate = evaluate_terms(*t, gens);
      if (satisfies_relators(p, b, candidate)) {
        Endomorphism g(e.backend_ptr(), candidate);
        if (fixes_generators(g.after(e))) {
          return g;
        }
      }
    }
    WitnessCursor witnesses(b, gens.size(), gens);
    for (std::uint64_t i = 0; i < budget.witness_cap; ++i) {
      auto c = witnesses.next();
      if (!c) {
        break;
      }
      if (!satisfies_relators(p, b, *c)) {
        continue;
      }
      Endomorphism g(e.backend_ptr(), *c);
      if (fixes_generators(g.after(e))) {
        return g;
      }
    }
    return std::nullopt;
  }

}  // namespace wwp
