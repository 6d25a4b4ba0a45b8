// Word-problem oracles for concrete group classes.
//
// A Backend realises a presentation as a computable group: it decides the
// word problem through canonical normal forms and enumerates the elements in
// shortlex order of those normal forms. Every backend is immutable once
// constructed and can be shared read-only between threads.

#ifndef WWP_BACKEND_HPP_
#define WWP_BACKEND_HPP_

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wwp/coset.hpp"
#include "wwp/presentation.hpp"
#include "wwp/rewriting.hpp"

namespace wwp {

  using BigInt = boost::multiprecision::cpp_int;

  enum class BackendKind {
    FreeGroup,
    FreeAbelian,
    InfiniteDihedral,
    FiniteCosetTable,
    RewritingSystem
  };

  char const* to_string(BackendKind k);

  class Backend;

  // Externally supplied decision procedure for membership of a tuple in the
  // Aut-orbit of the generating tuple. Only consulted for rewriting backends.
  class OrbitPlugin {
   public:
    virtual ~OrbitPlugin() = default;
    virtual bool        in_orbit(Backend const& b, WordTuple const& tuple) const = 0;
    virtual std::string name() const = 0;
  };

  struct Capabilities {
    bool                               word_problem_decidable = false;
    bool                               hopfian_certified      = false;
    bool                               builtin_orbit_decider  = false;
    std::shared_ptr<OrbitPlugin const> orbit_plugin;

    bool has_orbit_decider() const noexcept {
      return builtin_orbit_decider || orbit_plugin != nullptr;
    }
  };

  class Backend {
   public:
    virtual ~Backend() = default;

    BackendKind kind() const noexcept {
      return _kind;
    }
    Presentation const& presentation() const noexcept {
      return _presentation;
    }
    Capabilities const& capabilities() const noexcept {
      return _capabilities;
    }
    std::size_t rank() const noexcept {
      return _presentation.rank();
    }

    // Canonical representative. Throws NotCertified for an uncertified
    // rewriting system and Error when w uses an unknown generator.
    virtual Word normal_form(Word const& w) const = 0;

    bool is_identity(Word const& w) const {
      return normal_form(w).empty();
    }
    bool equal(Word const& u, Word const& v) const {
      return normal_form(u * v.inverse()).empty();
    }
    Word multiply(Word const& u, Word const& v) const {
      return normal_form(u * v);
    }
    WordTuple normal_forms(WordTuple const& t) const;

    // The normal forms of exactly this length, in lexicographic order.
    // Normal forms are closed under prefixes, so an empty result means no
    // longer normal forms exist either.
    virtual std::vector<Word> normal_forms_of_length(std::size_t length) const = 0;

    // Group order when finite and known.
    virtual std::optional<std::uint64_t> order() const {
      return std::nullopt;
    }

    virtual std::string describe() const;

   protected:
    Backend(BackendKind kind, Presentation p, Capabilities caps)
        : _kind(kind), _presentation(std::move(p)), _capabilities(std::move(caps)) {}

    void check_arena(Word const& w) const;

   private:
    BackendKind  _kind;
    Presentation _presentation;
    Capabilities _capabilities;
  };

  using BackendPtr = std::shared_ptr<Backend const>;

  ////////////////////////////////////////////////////////////////////////
  // Element enumeration
  ////////////////////////////////////////////////////////////////////////

  // Resumable enumeration of normal forms ordered by (length, lex).
  class ElementCursor {
   public:
    explicit ElementCursor(Backend const& b) : _backend(&b) {}

    std::optional<Word> next();

    std::uint64_t position() const noexcept {
      return _position;
    }

   private:
    Backend const*    _backend;
    std::size_t       _length = 0;
    std::size_t       _index  = 0;
    bool              _loaded = false;
    bool              _done   = false;
    std::uint64_t     _position = 0;
    std::vector<Word> _bucket;
  };

  // Random access view over the element enumeration, extended on demand.
  class ElementList {
   public:
    explicit ElementList(Backend const& b) : _cursor(b) {}

    // The i-th element, or nullptr when the group has fewer elements.
    Word const* at(std::size_t i);

    // Number of elements once the enumeration has run out.
    std::optional<std::size_t> known_size() const {
      return _exhausted ? std::optional<std::size_t>(_items.size()) : std::nullopt;
    }

   private:
    ElementCursor     _cursor;
    std::vector<Word> _items;
    bool              _exhausted = false;
  };

  // True iff every relator of p vanishes in b at the given tuple.
  bool satisfies_relators(Presentation const& p, Backend const& b, WordTuple const& tuple);

  ////////////////////////////////////////////////////////////////////////
  // Concrete backends
  ////////////////////////////////////////////////////////////////////////

  // Generator names used by the stock constructors: a for rank 1, x, y, z
  // for ranks 2 and 3, x1, ..., xn beyond.
  std::vector<std::string> stock_names(std::size_t rank);

  class FreeGroupBackend final : public Backend {
   public:
    explicit FreeGroupBackend(std::size_t rank);
    // p must have no relators.
    explicit FreeGroupBackend(Presentation p);

    Word              normal_form(Word const& w) const override;
    std::vector<Word> normal_forms_of_length(std::size_t length) const override;
  };

  class FreeAbelianBackend final : public Backend {
   public:
    explicit FreeAbelianBackend(std::size_t rank);
    FreeAbelianBackend(std::size_t rank, std::vector<std::string> names);

    Word              normal_form(Word const& w) const override;
    std::vector<Word> normal_forms_of_length(std::size_t length) const override;

    std::vector<BigInt> exponents(Word const& w) const;
    Word                from_exponents(std::vector<BigInt> const& e) const;
  };

  // < r, s | s^2, s*r*s*r >, elements r^k s^f with normal form r^k then s^f.
  class DihedralBackend final : public Backend {
   public:
    struct Element {
      long long k       = 0;
      bool      reflect = false;

      friend bool operator==(Element const&, Element const&) = default;
    };

    DihedralBackend();

    Word              normal_form(Word const& w) const override;
    std::vector<Word> normal_forms_of_length(std::size_t length) const override;

    static Element element(Word const& w);
    static Word    word(Element const& e);
  };

  class CosetTableBackend final : public Backend {
   public:
    // Runs coset enumeration over the trivial subgroup. Throws Error on
    // overflow.
    CosetTableBackend(Presentation p, std::uint64_t cap);

    Word                         normal_form(Word const& w) const override;
    std::vector<Word>            normal_forms_of_length(std::size_t length) const override;
    std::optional<std::uint64_t> order() const override {
      return _table.n_cosets;
    }

    CosetTable const& table() const noexcept {
      return _table;
    }
    // Index of the element in enumeration order.
    std::uint32_t index_of(Word const& w) const;
    Word const&   element(std::uint32_t index) const {
      return _elements[index];
    }

    // True iff the tuple satisfies the relators and generates the group,
    // that is, a-bar -> tuple is an automorphism.
    bool is_automorphic_image(WordTuple const& tuple) const;

    // Images of a-bar under every automorphism, as element indices, in
    // lexicographic order. Computed on first use.
    std::vector<std::vector<std::uint32_t>> const& automorphisms() const;

   private:
    CosetTable                 _table;
    std::vector<Word>          _elements;  // in enumeration order
    std::vector<std::uint32_t> _coset_to_index;

    mutable std::once_flag                          _aut_once;
    mutable std::vector<std::vector<std::uint32_t>> _automorphisms;
  };

  class RewritingBackend final : public Backend {
   public:
    // Uses the rules as given. hopfian_asserted records the caller's claim.
    RewritingBackend(Presentation p, RewriteRules rules, bool hopfian_asserted,
                     std::shared_ptr<OrbitPlugin const> plugin = nullptr);

    Word              normal_form(Word const& w) const override;
    std::vector<Word> normal_forms_of_length(std::size_t length) const override;

    RewriteRules const& rules() const noexcept {
      return _rules;
    }

   private:
    RewriteRules                           _rules;
    mutable std::mutex                     _mutex;
    mutable std::vector<std::vector<Word>> _levels;
  };

  // Completes initial_rules(p) with the given cap and wraps the result; the
  // backend is uncertified if completion overflows.
  std::shared_ptr<RewritingBackend> make_rewriting_backend(
      Presentation p, std::size_t cap, bool hopfian_asserted,
      std::shared_ptr<OrbitPlugin const> plugin = nullptr);

  // Small stock groups used throughout the tests and the CLI.
  Presentation s3_presentation();   // < a, b | a^2, b^3, a*b*a*b >
  Presentation z6_presentation();   // < a, b | a^2, b^3, a*b*a^-1*b^-1 >

}  // namespace wwp

#endif  // WWP_BACKEND_HPP_
