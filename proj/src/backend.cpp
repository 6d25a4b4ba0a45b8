#include "wwp/backend.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "wwp/error.hpp"

namespace wwp {

  char const* to_string(BackendKind k) {
    switch (k) {
      case BackendKind::FreeGroup:
        return "FreeGroup";
      case BackendKind::FreeAbelian:
        return "FreeAbelian";
      case BackendKind::InfiniteDihedral:
        return "InfiniteDihedral";
      case BackendKind::FiniteCosetTable:
        return "FiniteCosetTable";
      case BackendKind::RewritingSystem:
        return "RewritingSystem";
    }
    return "?";
  }

  std::string Backend::describe() const {
    std::string out = std::string(to_string(_kind)) + " " + format_presentation(_presentation);
    if (auto n = order()) {
      out += " order=" + std::to_string(*n);
    }
    return out;
  }

  void Backend::check_arena(Word const& w) const {
    if (!w.fits(rank())) {
      throw Error("word uses a generator outside the presentation");
    }
  }

  WordTuple Backend::normal_forms(WordTuple const& t) const {
    WordTuple out;
    out.reserve(t.size());
    for (auto const& w : t) {
      out.push_back(normal_form(w));
    }
    return out;
  }

  std::optional<Word> ElementCursor::next() {
    while (!_done) {
      if (!_loaded) {
        _bucket = _backend->normal_forms_of_length(_length);
        _index  = 0;
        _loaded = true;
        if (_bucket.empty()) {
          _done = true;
          break;
        }
      }
      if (_index < _bucket.size()) {
        ++_position;
        return _bucket[_index++];
      }
      ++_length;
      _loaded = false;
    }
    return std::nullopt;
  }

  Word const* ElementList::at(std::size_t i) {
    while (_items.size() <= i && !_exhausted) {
      if (auto w = _cursor.next()) {
        _items.push_back(std::move(*w));
      } else {
        _exhausted = true;
      }
    }
    return i < _items.size() ? &_items[i] : nullptr;
  }

  bool satisfies_relators(Presentation const& p, Backend const& b, WordTuple const& tuple) {
    if (tuple.size() != p.rank()) {
      throw ArityMismatch("tuple length " + std::to_string(tuple.size())
                          + " does not match generator count " + std::to_string(p.rank()));
    }
    for (auto const& w : tuple) {
      if (!w.fits(b.rank())) {
        throw Error("tuple entry is not a word over the backend's generators");
      }
    }
    return std::all_of(p.relators().begin(), p.relators().end(),
                       [&](Word const& r) { return b.is_identity(substitute(r, tuple)); });
  }

  std::vector<std::string> stock_names(std::size_t rank) {
    if (rank == 1) {
      return {"a"};
    }
    if (rank == 2) {
      return {"x", "y"};
    }
    if (rank == 3) {
      return {"x", "y", "z"};
    }
    return variable_names(rank);
  }

  ////////////////////////////////////////////////////////////////////////
  // Free group
  ////////////////////////////////////////////////////////////////////////

  namespace {
    Capabilities certified_caps() {
      Capabilities c;
      c.word_problem_decidable = true;
      c.hopfian_certified      = true;
      c.builtin_orbit_decider  = true;
      return c;
    }

    std::vector<Word> all_reduced_words(std::size_t length, std::size_t k) {
      std::vector<Word>   out;
      std::vector<Letter> w;
      if (!first_reduced_word(w, length, k)) {
        return out;
      }
      do {
        out.emplace_back(w);
      } while (next_reduced_word(w, k));
      return out;
    }
  }  // namespace

  FreeGroupBackend::FreeGroupBackend(std::size_t rank)
      : FreeGroupBackend(Presentation(stock_names(rank), {})) {}

  FreeGroupBackend::FreeGroupBackend(Presentation p)
      : Backend(BackendKind::FreeGroup, std::move(p), certified_caps()) {
    if (!presentation().relators().empty()) {
      throw Error("a free group presentation has no relators");
    }
  }

  Word FreeGroupBackend::normal_form(Word const& w) const {
    check_arena(w);
    return w;
  }

  std::vector<Word> FreeGroupBackend::normal_forms_of_length(std::size_t length) const {
    return all_reduced_words(length, rank());
  }

  ////////////////////////////////////////////////////////////////////////
  // Free abelian group
  ////////////////////////////////////////////////////////////////////////

  namespace {
    Presentation abelian_presentation(std::size_t rank, std::vector<std::string> names) {
      std::vector<Word> rels;
      for (std::uint32_t i = 0; i < rank; ++i) {
        for (std::uint32_t j = i + 1; j < rank; ++j) {
          rels.push_back(Word{Letter{i, false}, Letter{j, false}, Letter{i, true}, Letter{j, true}});
        }
      }
      return Presentation(std::move(names), std::move(rels));
    }
  }  // namespace

  FreeAbelianBackend::FreeAbelianBackend(std::size_t rank)
      : FreeAbelianBackend(rank, stock_names(rank)) {}

  FreeAbelianBackend::FreeAbelianBackend(std::size_t rank, std::vector<std::string> names)
      : Backend(BackendKind::FreeAbelian, abelian_presentation(rank, std::move(names)),
                certified_caps()) {}

  std::vector<BigInt> FreeAbelianBackend::exponents(Word const& w) const {
    check_arena(w);
    std::vector<BigInt> e(rank());
    for (Letter l : w.letters()) {
      e[l.gen] += l.sign();
    }
    return e;
  }

  Word FreeAbelianBackend::from_exponents(std::vector<BigInt> const& e) const {
    std::vector<Letter> out;
    for (std::uint32_t g = 0; g < e.size(); ++g) {
      BigInt n = abs(e[g]);
      Letter l{g, e[g] < 0};
      for (BigInt i = 0; i < n; ++i) {
        out.push_back(l);
      }
    }
    return Word(std::move(out));
  }

  Word FreeAbelianBackend::normal_form(Word const& w) const {
    return from_exponents(exponents(w));
  }

  std::vector<Word> FreeAbelianBackend::normal_forms_of_length(std::size_t length) const {
    std::vector<Word>   out;
    std::vector<BigInt> e(rank());
    std::function<void(std::size_t, long long)> rec = [&](std::size_t g, long long left) {
      if (g + 1 == rank()) {
        for (long long v : {left, -left}) {
          e[g] = v;
          out.push_back(from_exponents(e));
          if (left == 0) {
            break;
          }
        }
        return;
      }
      for (long long m = 0; m <= left; ++m) {
        for (long long v : {m, -m}) {
          e[g] = v;
          rec(g + 1, left - m);
          if (m == 0) {
            break;
          }
        }
      }
    };
    if (rank() > 0) {
      rec(0, static_cast<long long>(length));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Infinite dihedral group
  ////////////////////////////////////////////////////////////////////////

  DihedralBackend::DihedralBackend()
      : Backend(BackendKind::InfiniteDihedral,
                parse_presentation("< r, s | s^2, s*r*s*r >"), certified_caps()) {}

  DihedralBackend::Element DihedralBackend::element(Word const& w) {
    Element e;
    for (Letter l : w.letters()) {
      if (l.gen == 0) {
        // r^k s r^{+-1} = r^{k -+ 1} s
        e.k += e.reflect ? -l.sign() : l.sign();
      } else if (l.gen == 1) {
        e.reflect = !e.reflect;
      } else {
        throw Error("word uses a generator outside the presentation");
      }
    }
    return e;
  }

  Word DihedralBackend::word(Element const& e) {
    Word w = Word::generator(0).pow(e.k);
    if (e.reflect) {
      w = w * Word::generator(1);
    }
    return w;
  }

  Word DihedralBackend::normal_form(Word const& w) const {
    return word(element(w));
  }

  std::vector<Word> DihedralBackend::normal_forms_of_length(std::size_t length) const {
    if (length == 0) {
      return {Word()};
    }
    auto const        n = static_cast<long long>(length);
    std::vector<Word> out{word({n, false}), word({-n, false}), word({n - 1, true})};
    if (n > 1) {
      out.push_back(word({-(n - 1), true}));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Finite groups via coset tables
  ////////////////////////////////////////////////////////////////////////

  CosetTableBackend::CosetTableBackend(Presentation p, std::uint64_t cap)
      : Backend(BackendKind::FiniteCosetTable, std::move(p), certified_caps()) {
    auto result = coset_enumerate(presentation(), {}, cap);
    if (std::holds_alternative<CosetOverflow>(result)) {
      throw Error("coset enumeration exceeded the cap of " + std::to_string(cap) + " cosets");
    }
    _table = std::get<CosetTable>(std::move(result));
    // Breadth-first search in letter order visits elements in shortlex order
    // of their least representatives.
    std::uint32_t const   n = _table.n_cosets;
    std::vector<bool>     seen(n, false);
    std::deque<std::uint32_t> queue{0};
    std::vector<Word>     by_coset(n);
    seen[0] = true;
    _coset_to_index.assign(n, 0);
    while (!queue.empty()) {
      auto c = queue.front();
      queue.pop_front();
      _coset_to_index[c] = static_cast<std::uint32_t>(_elements.size());
      _elements.push_back(by_coset[c]);
      for (std::uint32_t code = 0; code < 2 * rank(); ++code) {
        auto l = Letter::from_code(code);
        auto d = _table.act(c, l);
        if (!seen[d]) {
          seen[d]     = true;
          by_coset[d] = by_coset[c] * Word::generator(l.gen, l.sign());
          queue.push_back(d);
        }
      }
    }
  }

  std::uint32_t CosetTableBackend::index_of(Word const& w) const {
    check_arena(w);
    return _coset_to_index[_table.act(0, w)];
  }

  Word CosetTableBackend::normal_form(Word const& w) const {
    return _elements[index_of(w)];
  }

  bool CosetTableBackend::is_automorphic_image(WordTuple const& tuple) const {
    if (!satisfies_relators(presentation(), *this, tuple)) {
      return false;
    }
    // Closure of {1} under right multiplication by the tuple entries.
    std::uint32_t const   n = _table.n_cosets;
    std::vector<bool>     seen(n, false);
    std::vector<std::uint32_t> stack{0};
    seen[0]            = true;
    std::uint32_t count = 1;
    while (!stack.empty()) {
      auto c = stack.back();
      stack.pop_back();
      for (auto const& w : tuple) {
        for (auto const& x : {w, w.inverse()}) {
          auto d = _table.act(c, x);
          if (!seen[d]) {
            seen[d] = true;
            ++count;
            stack.push_back(d);
          }
        }
      }
    }
    return count == n;
  }

  std::vector<std::vector<std::uint32_t>> const& CosetTableBackend::automorphisms() const {
    std::call_once(_aut_once, [this] {
      auto const                 n = static_cast<std::uint32_t>(_elements.size());
      std::vector<std::uint32_t> idx(rank(), 0);
      while (true) {
        WordTuple t;
        for (auto i : idx) {
          t.push_back(_elements[i]);
        }
        if (is_automorphic_image(t)) {
          _automorphisms.push_back(idx);
        }
        std::size_t k = idx.size();
        while (k > 0 && idx[k - 1] + 1 == n) {
          idx[--k] = 0;
        }
        if (k == 0) {
          break;
        }
        ++idx[k - 1];
      }
    });
    return _automorphisms;
  }

  std::vector<Word> CosetTableBackend::normal_forms_of_length(std::size_t length) const {
    std::vector<Word> out;
    for (auto const& w : _elements) {
      if (w.size() == length) {
        out.push_back(w);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Rewriting systems
  ////////////////////////////////////////////////////////////////////////

  RewritingBackend::RewritingBackend(Presentation p, RewriteRules rules, bool hopfian_asserted,
                                     std::shared_ptr<OrbitPlugin const> plugin)
      : Backend(BackendKind::RewritingSystem, std::move(p),
                Capabilities{rules.confluence_certified, hopfian_asserted, false, std::move(plugin)}),
        _rules(std::move(rules)) {
    if (_rules.alphabet_size != rank()) {
      throw ArityMismatch("rewriting rules are over a different alphabet");
    }
  }

  Word RewritingBackend::normal_form(Word const& w) const {
    if (!_rules.confluence_certified) {
      throw NotCertified("rewriting system is not certified confluent");
    }
    check_arena(w);
    return _rules.reduce(w);
  }

  std::vector<Word> RewritingBackend::normal_forms_of_length(std::size_t length) const {
    if (!_rules.confluence_certified) {
      throw NotCertified("rewriting system is not certified confluent");
    }
    std::lock_guard lock(_mutex);
    if (_levels.empty()) {
      _levels.push_back({Word()});
    }
    while (_levels.size() <= length) {
      std::vector<Word> next;
      for (auto const& w : _levels.back()) {
        for (std::uint32_t code = 0; code < 2 * rank(); ++code) {
          auto    l = Letter::from_code(code);
          Letters cand(w.letters().begin(), w.letters().end());
          if (!cand.empty() && cand.back() == l.inv()) {
            continue;
          }
          cand.push_back(l);
          if (_rules.is_irreducible(cand)) {
            next.emplace_back(std::move(cand));
          }
        }
      }
      _levels.push_back(std::move(next));
    }
    return _levels[length];
  }

  std::shared_ptr<RewritingBackend> make_rewriting_backend(Presentation p, std::size_t cap,
                                                           bool hopfian_asserted,
                                                           std::shared_ptr<OrbitPlugin const> plugin) {
    auto rules  = initial_rules(p);
    auto result = kb_complete(rules, cap);
    if (auto* done = std::get_if<RewriteRules>(&result)) {
      rules = *done;
    }
    return std::make_shared<RewritingBackend>(std::move(p), std::move(rules), hopfian_asserted,
                                              std::move(plugin));
  }

  Presentation s3_presentation() {
    return parse_presentation("< a, b | a^2, b^3, a*b*a*b >");
  }

  Presentation z6_presentation() {
    return parse_presentation("< a, b | a^2, b^3, a*b*a^-1*b^-1 >");
  }

}  // namespace wwp
