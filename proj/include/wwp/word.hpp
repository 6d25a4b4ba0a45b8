// Freely reduced words over an indexed alphabet of generators or variables.

#ifndef WWP_WORD_HPP_
#define WWP_WORD_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace wwp {

  // A signed generator symbol. Letters are totally ordered by code(), which
  // realises g0 < g0^-1 < g1 < g1^-1 < ...
  struct Letter {
    std::uint32_t gen     = 0;
    bool          inverse = false;

    constexpr std::uint32_t code() const noexcept {
      return 2 * gen + (inverse ? 1U : 0U);
    }
    static constexpr Letter from_code(std::uint32_t c) noexcept {
      return Letter{c / 2, (c & 1U) != 0};
    }
    constexpr Letter inv() const noexcept {
      return Letter{gen, !inverse};
    }
    constexpr int sign() const noexcept {
      return inverse ? -1 : 1;
    }

    friend constexpr bool operator==(Letter, Letter) = default;
    friend constexpr std::strong_ordering operator<=>(Letter a, Letter b) {
      return a.code() <=> b.code();
    }
  };

  class Word {
   public:
    Word() = default;

    // Freely reduces its argument.
    explicit Word(std::vector<Letter> letters);
    Word(std::initializer_list<Letter> letters);

    static Word generator(std::uint32_t gen, int sign = 1);

    std::span<Letter const> letters() const noexcept {
      return _letters;
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    Letter operator[](std::size_t i) const {
      return _letters[i];
    }

    Word inverse() const;
    Word pow(long long exponent) const;

    // True iff every letter index is < rank.
    bool fits(std::size_t rank) const noexcept;
    // 1 + the largest index used, 0 for the empty word.
    std::size_t alphabet_bound() const noexcept;

    friend Word operator*(Word const& u, Word const& v);

    friend bool operator==(Word const&, Word const&) = default;
    // Shortlex: shorter words first, then lexicographic on letter codes.
    friend std::strong_ordering operator<=>(Word const& u, Word const& v);

   private:
    struct Trusted {};
    Word(Trusted, std::vector<Letter> letters) : _letters(std::move(letters)) {}

    std::vector<Letter> _letters;

    friend Word free_reduce(std::span<Letter const> raw);
  };

  // Cancels adjacent inverse pairs until none remain.
  Word free_reduce(std::span<Letter const> raw);

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept;
  };

  using WordTuple = std::vector<Word>;

  struct WordTupleHash {
    std::size_t operator()(WordTuple const& t) const noexcept;
  };

  // Shortlex on each component in turn.
  bool tuple_less(WordTuple const& a, WordTuple const& b);

  std::size_t total_length(WordTuple const& t) noexcept;

}  // namespace wwp

template <>
struct std::hash<wwp::Word> : wwp::WordHash {};

#endif  // WWP_WORD_HPP_
