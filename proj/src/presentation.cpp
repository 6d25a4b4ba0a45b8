#include "wwp/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>
#include <unordered_set>

#include "wwp/error.hpp"

namespace wwp {

  ////////////////////////////////////////////////////////////////////////
  // Presentation
  ////////////////////////////////////////////////////////////////////////

  bool is_valid_name(std::string_view name) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) {
      return false;
    }
    return std::all_of(name.begin(), name.end(), [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
  }

  Presentation::Presentation(std::vector<std::string> generators,
                             std::vector<Word>        relators)
      : _generators(std::move(generators)) {
    if (_generators.empty()) {
      throw Error("a presentation needs at least one generator");
    }
    std::unordered_set<std::string> seen;
    for (auto const& g : _generators) {
      if (!is_valid_name(g)) {
        throw Error("invalid generator name '" + g + "'");
      }
      if (!seen.insert(g).second) {
        throw Error("duplicate generator name '" + g + "'");
      }
    }
    for (auto& r : relators) {
      if (!r.fits(rank())) {
        throw Error("relator uses an undeclared generator");
      }
      if (!r.empty()) {
        _relators.push_back(std::move(r));
      }
    }
  }

  std::optional<std::uint32_t> Presentation::index_of(std::string_view name) const {
    auto it = std::find(_generators.begin(), _generators.end(), name);
    if (it == _generators.end()) {
      return std::nullopt;
    }
    return static_cast<std::uint32_t>(it - _generators.begin());
  }

  WordTuple Presentation::generator_tuple() const {
    WordTuple out;
    for (std::uint32_t i = 0; i < rank(); ++i) {
      out.push_back(Word::generator(i));
    }
    return out;
  }

  std::vector<std::string> variable_names(std::size_t k, std::string_view stem) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= k; ++i) {
      out.push_back(std::string(stem) + std::to_string(i));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace {

    class Lexer {
     public:
      explicit Lexer(std::string_view text) : _text(text) {}

      void skip_space() {
        while (_pos < _text.size()) {
          char c = _text[_pos];
          if (c == '#') {
            while (_pos < _text.size() && _text[_pos] != '\n') {
              bump();
            }
          } else if (std::isspace(static_cast<unsigned char>(c))) {
            bump();
          } else {
            break;
          }
        }
      }

      bool at_end() {
        skip_space();
        return _pos >= _text.size();
      }

      char peek() {
        skip_space();
        return _pos < _text.size() ? _text[_pos] : '\0';
      }

      bool accept(char c) {
        if (peek() == c) {
          bump();
          return true;
        }
        return false;
      }

      void expect(char c) {
        if (!accept(c)) {
          fail(std::string("expected '") + c + "'");
        }
      }

      std::string name() {
        skip_space();
        std::size_t start = _pos;
        if (_pos >= _text.size() || !std::isalpha(static_cast<unsigned char>(_text[_pos]))) {
          fail("expected a name");
        }
        while (_pos < _text.size()
               && (std::isalnum(static_cast<unsigned char>(_text[_pos])) || _text[_pos] == '_')) {
          bump();
        }
        return std::string(_text.substr(start, _pos - start));
      }

      long long integer() {
        skip_space();
        bool negative = false;
        if (_pos < _text.size() && (_text[_pos] == '-' || _text[_pos] == '+')) {
          negative = _text[_pos] == '-';
          bump();
        }
        std::size_t start = _pos;
        while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
          bump();
        }
        if (start == _pos) {
          fail("expected an integer");
        }
        long long value = 0;
        auto [ptr, ec]  = std::from_chars(_text.data() + start, _text.data() + _pos, value);
        if (ec != std::errc()) {
          fail("integer out of range");
        }
        return negative ? -value : value;
      }

      [[noreturn]] void fail(std::string const& what) const {
        throw ParseError(what, _line, _column);
      }

      std::size_t line() const noexcept {
        return _line;
      }
      std::size_t column() const noexcept {
        return _column;
      }

     private:
      void bump() {
        if (_text[_pos] == '\n') {
          ++_line;
          _column = 1;
        } else {
          ++_column;
        }
        ++_pos;
      }

      std::string_view _text;
      std::size_t      _pos    = 0;
      std::size_t      _line   = 1;
      std::size_t      _column = 1;
    };

    class WordParser {
     public:
      WordParser(Lexer& lex, std::vector<std::string> const& names) : _lex(lex), _names(names) {}

      Word word() {
        Word w = factor();
        while (_lex.accept('*')) {
          w = w * factor();
        }
        return w;
      }

     private:
      Word factor() {
        Word base;
        char c = _lex.peek();
        if (c == '(') {
          _lex.expect('(');
          base = word();
          _lex.expect(')');
        } else if (c == '1') {
          _lex.expect('1');
        } else {
          auto line = _lex.line(), column = _lex.column();
          auto n    = _lex.name();
          auto it   = std::find(_names.begin(), _names.end(), n);
          if (it == _names.end()) {
            throw ParseError("undeclared generator '" + n + "'", line, column);
          }
          base = Word::generator(static_cast<std::uint32_t>(it - _names.begin()));
        }
        if (_lex.accept('^')) {
          return base.pow(_lex.integer());
        }
        return base;
      }

      Lexer&                          _lex;
      std::vector<std::string> const& _names;
    };

  }  // namespace

  Presentation parse_presentation(std::string_view text) {
    Lexer lex(text);
    lex.expect('<');
    std::vector<std::string> gens;
    do {
      auto line = lex.line(), column = lex.column();
      auto n    = lex.name();
      if (std::find(gens.begin(), gens.end(), n) != gens.end()) {
        throw ParseError("duplicate generator name '" + n + "'", line, column);
      }
      gens.push_back(std::move(n));
    } while (lex.accept(','));
    lex.expect('|');
    std::vector<Word> relators;
    if (lex.peek() != '>') {
      WordParser wp(lex, gens);
      do {
        relators.push_back(wp.word());
      } while (lex.accept(','));
    }
    lex.expect('>');
    if (!lex.at_end()) {
      lex.fail("trailing input after presentation");
    }
    return Presentation(std::move(gens), std::move(relators));
  }

  Word parse_word(std::string_view text, std::vector<std::string> const& names) {
    Lexer      lex(text);
    WordParser wp(lex, names);
    Word       w = wp.word();
    if (!lex.at_end()) {
      lex.fail("trailing input after word");
    }
    return w;
  }

  WordTuple parse_word_tuple(std::string_view text, std::vector<std::string> const& names) {
    Lexer      lex(text);
    WordParser wp(lex, names);
    WordTuple  out;
    if (lex.at_end()) {
      return out;
    }
    do {
      out.push_back(wp.word());
    } while (lex.accept(','));
    if (!lex.at_end()) {
      lex.fail("trailing input after word list");
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Printing
  ////////////////////////////////////////////////////////////////////////

  std::string format_word(Word const& w, std::vector<std::string> const& names) {
    if (w.empty()) {
      return "1";
    }
    std::ostringstream out;
    auto               letters = w.letters();
    for (std::size_t i = 0; i < letters.size();) {
      std::size_t j = i;
      while (j < letters.size() && letters[j] == letters[i]) {
        ++j;
      }
      if (i != 0) {
        out << '*';
      }
      auto g = letters[i].gen;
      out << (g < names.size() ? names[g] : "?" + std::to_string(g));
      long long e = static_cast<long long>(j - i) * letters[i].sign();
      if (e != 1) {
        out << '^' << e;
      }
      i = j;
    }
    return out.str();
  }

  std::string format_word_tuple(WordTuple const& t, std::vector<std::string> const& names) {
    std::string out;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i != 0) {
        out += ", ";
      }
      out += format_word(t[i], names);
    }
    return out;
  }

  std::string format_presentation(Presentation const& p) {
    std::string out = "< ";
    for (std::size_t i = 0; i < p.rank(); ++i) {
      out += (i == 0 ? "" : ", ") + p.generators()[i];
    }
    out += " |";
    for (std::size_t i = 0; i < p.relators().size(); ++i) {
      out += (i == 0 ? " " : ", ") + format_word(p.relators()[i], p.generators());
    }
    out += " >";
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Terms
  ////////////////////////////////////////////////////////////////////////

  TermTuple make_term_tuple(std::size_t arity_in, WordTuple components) {
    for (auto const& w : components) {
      if (!w.fits(arity_in)) {
        throw ArityMismatch("term uses a variable beyond x" + std::to_string(arity_in));
      }
    }
    return TermTuple{arity_in, std::move(components)};
  }

  Word substitute(Word const& w, WordTuple const& args) {
    std::vector<Letter> raw;
    for (Letter l : w.letters()) {
      if (l.gen >= args.size()) {
        throw ArityMismatch("substitution is missing a value for x" + std::to_string(l.gen + 1));
      }
      auto const& a = args[l.gen];
      if (l.inverse) {
        for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it) {
          raw.push_back(it->inv());
        }
      } else {
        raw.insert(raw.end(), a.letters().begin(), a.letters().end());
      }
    }
    return free_reduce(raw);
  }

  WordTuple evaluate_terms(TermTuple const& t, WordTuple const& args) {
    if (args.size() != t.arity_in) {
      throw ArityMismatch("term tuple expects " + std::to_string(t.arity_in) + " arguments, got "
                          + std::to_string(args.size()));
    }
    WordTuple out;
    out.reserve(t.size());
    for (auto const& c : t.components) {
      out.push_back(substitute(c, args));
    }
    return out;
  }

  TermTuple compose(TermTuple const& t, TermTuple const& s) {
    return TermTuple{s.arity_in, evaluate_terms(t, s.components)};
  }

  std::string format_term_tuple(TermTuple const& t) {
    return "(" + format_word_tuple(t.components, variable_names(t.arity_in)) + ")";
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  std::uint64_t count_reduced_words(std::size_t length, std::size_t k) {
    if (length == 0) {
      return 1;
    }
    if (k == 0) {
      return 0;
    }
    std::uint64_t n = 2 * k;
    for (std::size_t i = 1; i < length; ++i) {
      if (n > std::numeric_limits<std::uint64_t>::max() / (2 * k)) {
        return std::numeric_limits<std::uint64_t>::max();
      }
      n *= 2 * k - 1;
    }
    return n;
  }

  namespace {
    // Smallest letter that does not cancel against prev.
    std::uint32_t smallest_after(std::vector<Letter> const& w, std::size_t pos) {
      if (pos == 0) {
        return 0;
      }
      return w[pos - 1].inv().code() == 0 ? 1 : 0;
    }
  }  // namespace

  bool first_reduced_word(std::vector<Letter>& w, std::size_t length, std::size_t k) {
    w.assign(length, Letter{});
    if (length > 0 && k == 0) {
      return false;
    }
    for (std::size_t i = 0; i < length; ++i) {
      w[i] = Letter::from_code(smallest_after(w, i));
    }
    return true;
  }

  bool next_reduced_word(std::vector<Letter>& w, std::size_t k) {
    auto const limit = static_cast<std::uint32_t>(2 * k);
    for (std::size_t pos = w.size(); pos-- > 0;) {
      std::uint32_t c = w[pos].code() + 1;
      while (c < limit && pos > 0 && Letter::from_code(c) == w[pos - 1].inv()) {
        ++c;
      }
      if (c < limit) {
        w[pos] = Letter::from_code(c);
        for (std::size_t q = pos + 1; q < w.size(); ++q) {
          w[q] = Letter::from_code(smallest_after(w, q));
        }
        return true;
      }
    }
    return false;
  }

  TermCursor::TermCursor(std::size_t n_components, std::size_t k_vars)
      : _n(n_components), _k(k_vars) {}

  std::optional<TermTuple> TermCursor::next() {
    if (_done) {
      return std::nullopt;
    }
    if (!_started) {
      _started = true;
      _total   = 0;
      _lengths.assign(_n, 0);
      _current.assign(_n, {});
    } else if (!advance()) {
      _done = true;
      return std::nullopt;
    }
    ++_position;
    WordTuple comps;
    comps.reserve(_n);
    for (auto const& c : _current) {
      comps.emplace_back(c);
    }
    return TermTuple{_k, std::move(comps)};
  }

  bool TermCursor::first_for_lengths() {
    for (std::size_t i = 0; i < _n; ++i) {
      if (!first_reduced_word(_current[i], _lengths[i], _k)) {
        return false;
      }
    }
    return true;
  }

  bool TermCursor::next_lengths() {
    // Lexicographic successor among compositions of _total into _n parts.
    if (_n == 0) {
      return false;
    }
    std::size_t rest = _lengths[_n - 1];
    for (std::size_t i = _n - 1; i-- > 0;) {
      if (rest > 0) {
        _lengths[i] += 1;
        std::fill(_lengths.begin() + static_cast<std::ptrdiff_t>(i) + 1, _lengths.end(), 0);
        _lengths[_n - 1] = rest - 1;
        return true;
      }
      rest += _lengths[i];
    }
    return false;
  }

  bool TermCursor::advance() {
    // Odometer over components, last component fastest.
    for (std::size_t i = _n; i-- > 0;) {
      if (next_reduced_word(_current[i], _k)) {
        for (std::size_t j = i + 1; j < _n; ++j) {
          first_reduced_word(_current[j], _lengths[j], _k);
        }
        return true;
      }
    }
    // Next length profile, skipping profiles that admit no words.
    while (true) {
      if (!next_lengths()) {
        if (_n == 0 || _k == 0) {
          return false;
        }
        ++_total;
        _lengths.assign(_n, 0);
        _lengths[_n - 1] = _total;
      }
      if (first_for_lengths()) {
        return true;
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Tietze
  ////////////////////////////////////////////////////////////////////////

  Presentation change_generators(Presentation const&      p,
                                 WordTuple const&         new_gens_in_old,
                                 TermTuple const&         old_gens_in_new,
                                 WordOracle const&        is_identity,
                                 std::vector<std::string> new_names) {
    std::size_t const m = new_gens_in_old.size();
    if (old_gens_in_new.size() != p.rank() || old_gens_in_new.arity_in != m) {
      throw ArityMismatch("old generators must be expressed as a " + std::to_string(p.rank())
                          + "-tuple of words in " + std::to_string(m) + " new generators");
    }
    for (auto const& w : new_gens_in_old) {
      if (!w.fits(p.rank())) {
        throw ArityMismatch("new generator definition uses an undeclared generator");
      }
    }
    for (auto const& w : old_gens_in_new.components) {
      if (!w.fits(m)) {
        throw ArityMismatch("old generator expression uses an undeclared new generator");
      }
    }
    // Each old generator must come back when pushed through both maps.
    auto recovered = evaluate_terms(old_gens_in_new, new_gens_in_old);
    for (std::uint32_t i = 0; i < p.rank(); ++i) {
      if (!is_identity(recovered[i] * Word::generator(i, -1))) {
        throw Inconsistent("generator " + p.generators()[i]
                           + " is not recovered from the new generators");
      }
    }
    if (new_names.empty()) {
      if (m <= 3) {
        static char const* const stock[] = {"u", "v", "w"};
        new_names.assign(stock, stock + m);
      } else {
        new_names = variable_names(m, "u");
      }
    }
    if (new_names.size() != m) {
      throw ArityMismatch("wrong number of new generator names");
    }
    std::vector<Word> relators;
    for (auto const& r : p.relators()) {
      relators.push_back(substitute(r, old_gens_in_new.components));
    }
    for (std::uint32_t j = 0; j < m; ++j) {
      Word back = substitute(new_gens_in_old[j], old_gens_in_new.components);
      relators.push_back(Word::generator(j, -1) * back);
    }
    return Presentation(std::move(new_names), std::move(relators));
  }

}  // namespace wwp
