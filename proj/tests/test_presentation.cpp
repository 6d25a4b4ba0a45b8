#include <random>
#include <unordered_set>

#include "doctest.h"
#include "wwp/backend.hpp"
#include "wwp/error.hpp"
#include "wwp/presentation.hpp"

using namespace wwp;

namespace {
  Letter L(std::uint32_t g, bool inv = false) {
    return Letter{g, inv};
  }

  Word random_word(std::mt19937_64& rng, std::size_t max_len, std::uint32_t k) {
    std::uniform_int_distribution<std::size_t>   len(0, max_len);
    std::uniform_int_distribution<std::uint32_t> code(0, 2 * k - 1);
    std::vector<Letter>                          raw(len(rng));
    for (auto& l : raw) {
      l = Letter::from_code(code(rng));
    }
    return Word(raw);
  }
}  // namespace

TEST_CASE("free_reduce examples") {
  auto a = L(0), b = L(1);
  std::vector<Letter> raw{a, b, b.inv(), a};
  CHECK(free_reduce(raw) == Word{a, a});
  raw = {a, a.inv()};
  CHECK(free_reduce(raw).empty());
  raw = {b.inv(), a, a.inv(), b};
  CHECK(free_reduce(raw).empty());
}

TEST_CASE("free_reduce properties") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    std::vector<Letter> raw;
    std::uniform_int_distribution<std::uint32_t> code(0, 5);
    for (int j = 0; j < 12; ++j) {
      raw.push_back(Letter::from_code(code(rng)));
    }
    auto w = free_reduce(raw);
    CHECK(w.size() <= raw.size());
    CHECK(free_reduce(w.letters()) == w);
    CHECK((w * w.inverse()).empty());
    for (std::size_t j = 1; j < w.size(); ++j) {
      CHECK(w[j] != w[j - 1].inv());
    }
  }
}

TEST_CASE("parse_presentation examples") {
  auto p = parse_presentation("< a, b | a^2, b^3 >");
  CHECK(p.rank() == 2);
  REQUIRE(p.relators().size() == 2);
  CHECK(p.relators()[0] == Word{L(0), L(0)});
  CHECK(p.relators()[1] == Word{L(1), L(1), L(1)});

  auto z = parse_presentation("< a | >");
  CHECK(z.rank() == 1);
  CHECK(z.relators().empty());

  CHECK(parse_presentation("< a | a*a^-1 >").relators().empty());
  CHECK(parse_presentation("< a | a^0 >").relators().empty());
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_presentation("< a, a | >"), Error);
  CHECK_THROWS_AS(parse_presentation("< a | b >"), Error);
  CHECK_THROWS_AS(parse_presentation("< a | a^ >"), ParseError);
  CHECK_THROWS_AS(parse_presentation("< 1a | >"), Error);
  try {
    parse_presentation("< a |\n  a**a >");
    FAIL("expected a parse error");
  } catch (ParseError const& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() > 1);
  }
}

TEST_CASE("parse print round trip") {
  for (auto text : {"< a, b | a^2, b^3, a*b*a*b >", "< x, y | >", "< r, s | s^2, s*r*s*r >",
                    "< a | a^-5 >", "< x1, x2, x3 | x1*x2^-1*x3^2, x3^-2 >"}) {
    auto p = parse_presentation(text);
    auto q = parse_presentation(format_presentation(p));
    CHECK(p == q);
  }
  CHECK(format_presentation(parse_presentation("<a,b|a^2,b*b*b>")) == "< a, b | a^2, b^3 >");
}

TEST_CASE("evaluate_terms examples") {
  auto a = Word::generator(0), b = Word::generator(1);
  auto t = make_term_tuple(2, {Word::generator(0) * Word::generator(1)});
  CHECK(evaluate_terms(t, {a, b}) == WordTuple{a * b});
  auto id = make_term_tuple(1, {Word{L(0), L(0, true)}});
  CHECK(evaluate_terms(id, {b * b}) == WordTuple{Word()});
  auto swap = make_term_tuple(2, {Word::generator(1), Word::generator(0)});
  CHECK(evaluate_terms(swap, {a.pow(2), b}) == WordTuple{b, a.pow(2)});
  CHECK_THROWS_AS(evaluate_terms(swap, {a}), ArityMismatch);
  CHECK_THROWS_AS(make_term_tuple(1, {Word::generator(1)}), ArityMismatch);
}

TEST_CASE("evaluate_terms respects composition") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    TermTuple t{2, {random_word(rng, 6, 2), random_word(rng, 6, 2)}};
    TermTuple s{2, {random_word(rng, 6, 2), random_word(rng, 6, 2)}};
    WordTuple u{random_word(rng, 6, 3), random_word(rng, 6, 3)};
    CHECK(evaluate_terms(t, evaluate_terms(s, u)) == evaluate_terms(compose(t, s), u));
  }
}

TEST_CASE("enumerate_terms order") {
  TermCursor c(1, 1);
  CHECK(c.next()->components == WordTuple{Word()});
  CHECK(c.next()->components == WordTuple{Word::generator(0)});
  CHECK(c.next()->components == WordTuple{Word::generator(0, -1)});
  CHECK(c.next()->components == WordTuple{Word::generator(0).pow(2)});
  CHECK(c.position() == 4);

  TermCursor d(2, 2);
  CHECK(d.next()->components == WordTuple{Word(), Word()});
  // Total length 1: first component nonempty comes after the lengths (0,1).
  CHECK(d.next()->components == WordTuple{Word(), Word::generator(0)});
}

TEST_CASE("enumerate_terms is total and duplicate free") {
  // Number of pairs of reduced words in 2 letters with total length <= 4.
  std::uint64_t expected = 0;
  for (std::size_t total = 0; total <= 4; ++total) {
    for (std::size_t l1 = 0; l1 <= total; ++l1) {
      expected += count_reduced_words(l1, 2) * count_reduced_words(total - l1, 2);
    }
  }
  TermCursor                                   c(2, 2);
  std::unordered_set<WordTuple, WordTupleHash> seen;
  std::size_t                                  last_total = 0;
  for (int i = 0; i < 100000; ++i) {
    auto t = c.next();
    REQUIRE(t);
    auto len = total_length(t->components);
    CHECK(len >= last_total);
    last_total = len;
    CHECK(seen.insert(t->components).second);
    if (i + 1 == static_cast<int>(expected)) {
      CHECK(last_total == 4);
    }
    if (static_cast<std::uint64_t>(i) >= expected) {
      CHECK(len > 4);
      break;
    }
  }
}

TEST_CASE("enumerate_terms with zero variables") {
  TermCursor c(2, 0);
  CHECK(c.next()->components == WordTuple{Word(), Word()});
  CHECK_FALSE(c.next());
}

TEST_CASE("change_generators") {
  FreeGroupBackend f2(2);
  auto             oracle = [&](Word const& w) { return f2.is_identity(w); };
  auto x = Word::generator(0), y = Word::generator(1);

  auto q = change_generators(f2.presentation(), {x, x * y},
                             make_term_tuple(2, {Word::generator(0),
                                                 Word::generator(0, -1) * Word::generator(1)}),
                             oracle);
  CHECK(q.generators() == std::vector<std::string>{"u", "v"});
  // Each relator must be trivial in the free group on (u, v).
  for (auto const& r : q.relators()) {
    CHECK(r.empty());
  }

  auto same = change_generators(f2.presentation(), {x, y},
                                make_term_tuple(2, {Word::generator(0), Word::generator(1)}),
                                oracle, {"x", "y"});
  CHECK(same.relators().empty());

  FreeGroupBackend z(1);
  auto inv = change_generators(z.presentation(), {Word::generator(0, -1)},
                               make_term_tuple(1, {Word::generator(0, -1)}),
                               [&](Word const& w) { return z.is_identity(w); });
  CHECK(format_presentation(inv) == "< u | >");

  CHECK_THROWS_AS(change_generators(f2.presentation(), {x * x, y},
                                    make_term_tuple(2, {Word::generator(0), Word::generator(1)}),
                                    oracle),
                  Inconsistent);

  // Over S3 a genuine relator survives the change.
  CosetTableBackend s3(s3_presentation(), 100);
  auto a = Word::generator(0), b = Word::generator(1);
  auto r  = change_generators(s3.presentation(), {a, a * b},
                              make_term_tuple(2, {Word::generator(0),
                                                  Word::generator(0, -1) * Word::generator(1)}),
                              [&](Word const& w) { return s3.is_identity(w); });
  CosetTableBackend again(r, 100);
  CHECK(again.order() == 6);
}
