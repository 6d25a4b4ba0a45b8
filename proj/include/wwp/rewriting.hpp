// Shortlex string rewriting over the symmetrised alphabet g0 < g0^-1 < g1 < ...
// Free cancellation g g^-1 -> 1 is always implicitly present and is never
// listed among the rules.

#ifndef WWP_REWRITING_HPP_
#define WWP_REWRITING_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wwp/presentation.hpp"

namespace wwp {

  using Letters = std::vector<Letter>;

  bool shortlex_less(Letters const& u, Letters const& v);

  struct RewriteRule {
    Letters lhs;
    Letters rhs;

    friend bool operator==(RewriteRule const&, RewriteRule const&) = default;
  };

  struct RewriteRules {
    std::size_t              alphabet_size = 0;  // number of generators
    std::vector<RewriteRule> rules;
    bool                     confluence_certified = false;

    // Rewrites to an irreducible word (free cancellation included).
    Letters reduce(Letters const& w) const;
    Word    reduce(Word const& w) const;
    bool    is_irreducible(Letters const& w) const;
  };

  // One rule r -> 1 per cyclic conjugate of each relator and its inverse.
  RewriteRules initial_rules(Presentation const& p);

  // Reads "lhs -> rhs" lines ("1" is the empty word, '#' starts a comment).
  RewriteRules parse_rules(std::string_view text, std::vector<std::string> const& names);

  std::string format_rules(RewriteRules const& r, std::vector<std::string> const& names);

  struct CompletionOverflow {
    std::size_t rules_reached = 0;
  };

  // Bounded Knuth-Bendix completion. On success the returned rules are
  // interreduced, every critical pair (including those against free
  // cancellation) resolves, and confluence_certified is set.
  std::variant<RewriteRules, CompletionOverflow> kb_complete(RewriteRules const& rules,
                                                             std::size_t         cap);

  // Checks all critical pairs of the given system.
  bool is_locally_confluent(RewriteRules const& rules);

}  // namespace wwp

#endif  // WWP_REWRITING_HPP_
