// Group presentations, term tuples, and their text syntax.
//
//   presentation := "<" gen_list "|" relator_list ">"
//   gen_list     := name ("," name)*
//   relator_list := empty | word ("," word)*
//   word         := factor ("*" factor)*
//   factor       := (name | "1" | "(" word ")") ("^" integer)?
//
// "1" and parenthesised groups are accepted on input; the printer only emits
// the plain form. A '#' starts a comment running to the end of the line.

#ifndef WWP_PRESENTATION_HPP_
#define WWP_PRESENTATION_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wwp/word.hpp"

namespace wwp {

  class Presentation {
   public:
    Presentation() = default;

    // Relators are freely reduced; those reducing to the identity are dropped.
    // Throws Error on an empty or duplicate generator name, an invalid name,
    // or a relator using an index outside the generator list.
    Presentation(std::vector<std::string> generators, std::vector<Word> relators);

    std::vector<std::string> const& generators() const noexcept {
      return _generators;
    }
    std::vector<Word> const& relators() const noexcept {
      return _relators;
    }
    std::size_t rank() const noexcept {
      return _generators.size();
    }

    std::optional<std::uint32_t> index_of(std::string_view name) const;

    // The generating tuple a-bar as words.
    WordTuple generator_tuple() const;

    friend bool operator==(Presentation const&, Presentation const&) = default;

   private:
    std::vector<std::string> _generators;
    std::vector<Word>        _relators;
  };

  bool is_valid_name(std::string_view name);

  Presentation parse_presentation(std::string_view text);

  // Parses a single word over the given names.
  Word parse_word(std::string_view text, std::vector<std::string> const& names);

  // Parses a comma separated list of words.
  WordTuple parse_word_tuple(std::string_view text, std::vector<std::string> const& names);

  std::string format_word(Word const& w, std::vector<std::string> const& names);
  std::string format_word_tuple(WordTuple const& t, std::vector<std::string> const& names);
  std::string format_presentation(Presentation const& p);

  // Standard names x1, ..., xk for term variables.
  std::vector<std::string> variable_names(std::size_t k, std::string_view stem = "x");

  // An n-tuple of words in the variables x1, ..., xk.
  struct TermTuple {
    std::size_t arity_in = 0;
    WordTuple   components;

    std::size_t size() const noexcept {
      return components.size();
    }

    friend bool operator==(TermTuple const&, TermTuple const&) = default;
  };

  // Throws ArityMismatch when some component uses a variable >= arity_in.
  TermTuple make_term_tuple(std::size_t arity_in, WordTuple components);

  // Substitutes args[j] for x_{j+1} in every component, then reduces freely.
  WordTuple evaluate_terms(TermTuple const& t, WordTuple const& args);

  // Substitution into a single word.
  Word substitute(Word const& w, WordTuple const& args);

  // compose(t, s) satisfies evaluate_terms(t, evaluate_terms(s, u)) ==
  // evaluate_terms(compose(t, s), u).
  TermTuple compose(TermTuple const& t, TermTuple const& s);

  std::string format_term_tuple(TermTuple const& t);

  // Number of freely reduced words of the given length on k letters.
  std::uint64_t count_reduced_words(std::size_t length, std::size_t k);

  // Resumable enumeration of all reduced n-tuples of words in k variables,
  // ordered by total length, then by the component sequence compared
  // shortlex component-wise (x1 < x1^-1 < x2 < ...). Every tuple is produced
  // exactly once.
  class TermCursor {
   public:
    TermCursor(std::size_t n_components, std::size_t k_vars);

    std::optional<TermTuple> next();

    // Number of tuples produced so far.
    std::uint64_t position() const noexcept {
      return _position;
    }
    std::size_t components() const noexcept {
      return _n;
    }
    std::size_t variables() const noexcept {
      return _k;
    }

   private:
    bool advance();
    bool first_for_lengths();
    bool next_lengths();

    std::size_t                      _n;
    std::size_t                      _k;
    std::uint64_t                    _position = 0;
    bool                             _started  = false;
    bool                             _done     = false;
    std::size_t                      _total    = 0;
    std::vector<std::size_t>         _lengths;
    std::vector<std::vector<Letter>> _current;
  };

  // Reduced words of one length in lexicographic order.
  bool first_reduced_word(std::vector<Letter>& w, std::size_t length, std::size_t k);
  bool next_reduced_word(std::vector<Letter>& w, std::size_t k);

  using WordOracle = std::function<bool(Word const&)>;

  // Tietze change of generators. new_gens_in_old lists the new generators as
  // words in the old ones; old_gens_in_new expresses each old generator in the
  // new ones. is_identity decides the word problem of p. The result has one
  // relator per old relator (rewritten) and one per new generator equating
  // it with its definition rewritten back. Throws Inconsistent when some old
  // generator is not recovered, ArityMismatch on shape errors.
  Presentation change_generators(Presentation const&        p,
                                 WordTuple const&           new_gens_in_old,
                                 TermTuple const&           old_gens_in_new,
                                 WordOracle const&          is_identity,
                                 std::vector<std::string>   new_names = {});

}  // namespace wwp

#endif  // WWP_PRESENTATION_HPP_
