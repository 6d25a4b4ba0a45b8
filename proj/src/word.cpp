#include "wwp/word.hpp"

#include <algorithm>
#include <cstdlib>

namespace wwp {

  Word free_reduce(std::span<Letter const> raw) {
    std::vector<Letter> out;
    out.reserve(raw.size());
    for (Letter l : raw) {
      if (!out.empty() && out.back() == l.inv()) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }
    return Word(Word::Trusted{}, std::move(out));
  }

  Word::Word(std::vector<Letter> letters) : Word(free_reduce(letters)) {}

  Word::Word(std::initializer_list<Letter> letters)
      : Word(free_reduce(std::span<Letter const>(letters.begin(), letters.size()))) {}

  Word Word::generator(std::uint32_t gen, int sign) {
    return Word(Trusted{}, {Letter{gen, sign < 0}});
  }

  Word Word::inverse() const {
    std::vector<Letter> out(_letters.rbegin(), _letters.rend());
    for (auto& l : out) {
      l = l.inv();
    }
    return Word(Trusted{}, std::move(out));
  }

  Word Word::pow(long long exponent) const {
    Word base = exponent < 0 ? inverse() : *this;
    auto n    = static_cast<unsigned long long>(std::llabs(exponent));
    std::vector<Letter> raw;
    raw.reserve(n * base.size());
    for (unsigned long long i = 0; i < n; ++i) {
      raw.insert(raw.end(), base._letters.begin(), base._letters.end());
    }
    return free_reduce(raw);
  }

  bool Word::fits(std::size_t rank) const noexcept {
    return alphabet_bound() <= rank;
  }

  std::size_t Word::alphabet_bound() const noexcept {
    std::size_t bound = 0;
    for (Letter l : _letters) {
      bound = std::max<std::size_t>(bound, l.gen + 1);
    }
    return bound;
  }

  Word operator*(Word const& u, Word const& v) {
    std::size_t k = 0;
    while (k < u.size() && k < v.size()
           && u._letters[u.size() - 1 - k] == v._letters[k].inv()) {
      ++k;
    }
    std::vector<Letter> out;
    out.reserve(u.size() + v.size() - 2 * k);
    out.insert(out.end(), u._letters.begin(), u._letters.end() - static_cast<std::ptrdiff_t>(k));
    out.insert(out.end(), v._letters.begin() + static_cast<std::ptrdiff_t>(k), v._letters.end());
    return Word(Word::Trusted{}, std::move(out));
  }

  std::strong_ordering operator<=>(Word const& u, Word const& v) {
    if (auto c = u.size() <=> v.size(); c != 0) {
      return c;
    }
    return std::lexicographical_compare_three_way(
        u._letters.begin(), u._letters.end(), v._letters.begin(), v._letters.end());
  }

  std::size_t WordHash::operator()(Word const& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Letter l : w.letters()) {
      h ^= l.code() + 1;
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  std::size_t WordTupleHash::operator()(WordTuple const& t) const noexcept {
    std::size_t h = 0x84222325ULL;
    for (auto const& w : t) {
      h = (h ^ WordHash{}(w)) * 0x9e3779b97f4a7c15ULL + 0x7f4a7c15;
    }
    return h;
  }

  bool tuple_less(WordTuple const& a, WordTuple const& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }

  std::size_t total_length(WordTuple const& t) noexcept {
    std::size_t n = 0;
    for (auto const& w : t) {
      n += w.size();
    }
    return n;
  }

}  // namespace wwp
