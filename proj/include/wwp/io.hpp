// JSON forms of the core values and backend construction from options.
//
//   Word:         [[index, sign], ...]          sign is 1 or -1
//   WordTuple:    [Word, ...]
//   TermTuple:    {"arity": k, "components": [Word, ...]}
//   Presentation: {"generators": [name, ...], "relators": [Word, ...]}

#ifndef WWP_IO_HPP_
#define WWP_IO_HPP_

#include <string>

#include "json.hpp"
#include "wwp/backend.hpp"
#include "wwp/orbit.hpp"

namespace wwp {

  inline constexpr int kSchemaVersion = 1;

  nlohmann::json to_json(Word const& w);
  nlohmann::json to_json(WordTuple const& t);
  nlohmann::json to_json(TermTuple const& t);
  nlohmann::json to_json(Presentation const& p);

  // Throw ParseError (line 0) on a malformed document.
  Word         word_from_json(nlohmann::json const& j);
  WordTuple    word_tuple_from_json(nlohmann::json const& j);
  TermTuple    term_tuple_from_json(nlohmann::json const& j);
  Presentation presentation_from_json(nlohmann::json const& j);

  // Certificate fields are included when present; words are given both as
  // text over the presentation's generators and in letter form.
  nlohmann::json to_json(OrbitVerdict const& v, Presentation const& p);

  std::string read_text_file(std::string const& path);

  struct BackendOptions {
    std::string   kind = "free";  // free, abelian, dihedral, coset, rewrite
    std::size_t   rank = 2;
    // Presentation text (starting with '<'), one of the stock names s3 and
    // z6, or a path to a file holding it.
    std::string   presentation;
    std::string   rules_file;  // rewrite: "lhs -> rhs" lines instead of completion
    std::uint64_t coset_cap = 1'000'000;
    std::size_t   kb_cap    = 500;
    bool          hopfian   = false;  // rewrite: the caller asserts Hopficity
  };

  // Throws Error on an unknown kind or a missing presentation.
  BackendPtr make_backend(BackendOptions const& o);

}  // namespace wwp

#endif  // WWP_IO_HPP_
