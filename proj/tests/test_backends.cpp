#include <random>
#include <unordered_set>

#include "doctest.h"
#include "wwp/backend.hpp"
#include "wwp/error.hpp"

using namespace wwp;

namespace {
  Word g(std::uint32_t i, int sign = 1) {
    return Word::generator(i, sign);
  }

  std::vector<Word> all_words_upto(std::size_t n, std::size_t k) {
    std::vector<Word> out;
    for (std::size_t len = 0; len <= n; ++len) {
      std::vector<Letter> w;
      if (!first_reduced_word(w, len, k)) {
        continue;
      }
      do {
        out.emplace_back(w);
      } while (next_reduced_word(w, k));
    }
    return out;
  }

  std::vector<BackendPtr> certified_rank2() {
    return {std::make_shared<FreeGroupBackend>(2), std::make_shared<FreeAbelianBackend>(2),
            std::make_shared<DihedralBackend>(),
            std::make_shared<CosetTableBackend>(s3_presentation(), 100),
            std::make_shared<CosetTableBackend>(z6_presentation(), 100)};
  }
}  // namespace

TEST_CASE("normal form examples") {
  FreeGroupBackend f2(2);
  CHECK(f2.normal_form(g(0) * g(1) * g(1, -1)) == g(0));
  FreeAbelianBackend z2(2);
  CHECK(z2.normal_form(g(1) * g(0) * g(1, -1)) == g(0));
  CHECK(z2.exponents(g(1) * g(0) * g(1, -1)) == std::vector<BigInt>{1, 0});
  DihedralBackend d;
  CHECK(d.normal_form(g(1) * g(0)) == g(0, -1) * g(1));
}

TEST_CASE("is_identity examples") {
  FreeAbelianBackend z2(2);
  FreeGroupBackend   f2(2);
  auto               comm = g(0) * g(1) * g(0, -1) * g(1, -1);
  CHECK(z2.is_identity(comm));
  CHECK_FALSE(f2.is_identity(comm));
  CosetTableBackend s3(s3_presentation(), 100);
  CHECK(s3.is_identity((g(0) * g(1)).pow(2)));
  CHECK_THROWS_AS(f2.normal_form(g(2)), Error);
}

TEST_CASE("enumerate_elements") {
  FreeGroupBackend f1(1);
  ElementCursor    c(f1);
  std::vector<Word> want{Word(), g(0), g(0, -1), g(0).pow(2), g(0).pow(-2)};
  for (auto const& w : want) {
    CHECK(c.next() == w);
  }

  CosetTableBackend s3(s3_presentation(), 100);
  ElementCursor     e(s3);
  int               n = 0;
  while (e.next()) {
    ++n;
  }
  CHECK(n == 6);
  CHECK_FALSE(e.next());

  DihedralBackend   d;
  ElementCursor     dc(d);
  auto r = g(0), s = g(1);
  std::vector<Word> dwant{Word(), r, r.inverse(), s, r * r};
  for (auto const& w : dwant) {
    CHECK(dc.next() == w);
  }
}

TEST_CASE("enumeration is duplicate free and emits fixed points") {
  for (auto const& b : certified_rank2()) {
    ElementCursor                      c(*b);
    std::unordered_set<Word, WordHash> seen;
    Word                               prev;
    for (int i = 0; i < 10000; ++i) {
      auto w = c.next();
      if (!w) {
        CHECK(b->order().has_value());
        CHECK(seen.size() == *b->order());
        break;
      }
      CHECK(seen.insert(*w).second);
      CHECK(b->normal_form(*w) == *w);
      if (i > 0) {
        CHECK(prev < *w);
      }
      prev = *w;
    }
  }
}

TEST_CASE("word problem agrees with normal forms") {
  auto words = all_words_upto(3, 2);
  for (auto const& b : certified_rank2()) {
    for (auto const& u : words) {
      for (auto const& v : words) {
        CHECK(b->is_identity(u * v.inverse()) == (b->normal_form(u) == b->normal_form(v)));
      }
    }
  }
}

TEST_CASE("free abelian agrees with abelianised free group") {
  FreeAbelianBackend z2(2);
  for (auto const& w : all_words_upto(8, 2)) {
    long long e0 = 0, e1 = 0;
    for (auto l : w.letters()) {
      (l.gen == 0 ? e0 : e1) += l.sign();
    }
    CHECK(z2.normal_form(w) == g(0).pow(e0) * g(1).pow(e1));
  }
}

TEST_CASE("dihedral normal forms match a rewriting oracle") {
  DihedralBackend d;
  auto            rw = make_rewriting_backend(d.presentation(), 50, true);
  REQUIRE(rw->capabilities().word_problem_decidable);
  for (auto const& w : all_words_upto(6, 2)) {
    CHECK(d.equal(w, rw->normal_form(w)));
    CHECK(rw->equal(w, d.normal_form(w)));
  }
}

TEST_CASE("satisfies_relators") {
  CosetTableBackend s3(s3_presentation(), 100);
  auto p = parse_presentation("< a, b | a^2 >");
  CHECK(satisfies_relators(p, s3, {g(0) * g(1), g(1)}));
  CHECK(satisfies_relators(s3.presentation(), s3, s3.presentation().generator_tuple()));
  auto z2p = parse_presentation("< a | a^2 >");
  CosetTableBackend z2(z2p, 10);
  CHECK(satisfies_relators(z2p, z2, {Word()}));
  CHECK_FALSE(satisfies_relators(p, s3, {g(1), g(1)}));
  CHECK_THROWS_AS(satisfies_relators(p, s3, {g(0)}), ArityMismatch);
  CHECK_THROWS_AS(satisfies_relators(z2p, z2, {g(1)}), Error);
}

TEST_CASE("coset enumeration examples") {
  auto s3 = coset_enumerate(s3_presentation(), {}, 100);
  REQUIRE(std::holds_alternative<CosetTable>(s3));
  CHECK(std::get<CosetTable>(s3).n_cosets == 6);
  CHECK(is_closed_table(std::get<CosetTable>(s3), s3_presentation()));

  auto trivial = coset_enumerate(parse_presentation("< a | a >"), {}, 10);
  REQUIRE(std::holds_alternative<CosetTable>(trivial));
  CHECK(std::get<CosetTable>(trivial).n_cosets == 1);

  CHECK(std::holds_alternative<CosetOverflow>(coset_enumerate(parse_presentation("< a | >"), {}, 10)));

  // Index of a subgroup.
  auto sub = coset_enumerate(s3_presentation(), {g(1)}, 100);
  REQUIRE(std::holds_alternative<CosetTable>(sub));
  CHECK(std::get<CosetTable>(sub).n_cosets == 2);

  for (auto text : {"< a, b | a^2, b^3, (a*b)^4 >", "< a, b | a^2, b^3, (a*b)^5 >",
                    "< a, b | a^3, b^3, (a*b)^3, (a^-1*b)^2 >", "< a, b | a^4, b^2, a*b*a*b >"}) {
    auto p = parse_presentation(text);
    auto t = coset_enumerate(p, {}, 5000);
    REQUIRE(std::holds_alternative<CosetTable>(t));
    CHECK(is_closed_table(std::get<CosetTable>(t), p));
  }
  CHECK(std::get<CosetTable>(coset_enumerate(parse_presentation("< a, b | a^2, b^3, (a*b)^5 >"), {}, 5000)).n_cosets == 60);
  CHECK(std::get<CosetTable>(coset_enumerate(parse_presentation("< a, b | a^2, b^3, (a*b)^4 >"), {}, 5000)).n_cosets == 24);
}

TEST_CASE("coset tables satisfy the group axioms") {
  for (auto text : {"< a, b | a^2, b^3, a*b*a*b >", "< a, b | a^2, b^3, a*b*a^-1*b^-1 >",
                    "< a, b | a^2, b^3, (a*b)^4 >", "< a, b | a^4, b^2, a*b*a*b >"}) {
    CosetTableBackend b(parse_presentation(text), 1000);
    auto const        n = *b.order();
    REQUIRE(n <= 24);
    std::vector<Word> el;
    for (std::uint32_t i = 0; i < n; ++i) {
      el.push_back(b.element(i));
      CHECK(b.index_of(el.back()) == i);
    }
    for (auto const& x : el) {
      CHECK(b.is_identity(b.multiply(x, x.inverse())));
      for (auto const& y : el) {
        for (auto const& z : el) {
          CHECK(b.multiply(b.multiply(x, y), z) == b.multiply(x, b.multiply(y, z)));
        }
      }
    }
  }
}

TEST_CASE("knuth-bendix examples") {
  auto s  = parse_presentation("< s | s^2 >");
  auto kb = kb_complete(initial_rules(s), 20);
  REQUIRE(std::holds_alternative<RewriteRules>(kb));
  auto const& r = std::get<RewriteRules>(kb);
  CHECK(r.confluence_certified);
  CHECK(format_rules(r, s.generators()) == "s^-1 -> s\ns^2 -> 1\n");

  auto free = kb_complete(initial_rules(parse_presentation("< a, b | >")), 5);
  REQUIRE(std::holds_alternative<RewriteRules>(free));
  CHECK(std::get<RewriteRules>(free).rules.empty());
  CHECK(std::get<RewriteRules>(free).confluence_certified);

  auto d = kb_complete(initial_rules(DihedralBackend().presentation()), 50);
  REQUIRE(std::holds_alternative<RewriteRules>(d));
  CHECK(std::get<RewriteRules>(d).confluence_certified);
}

TEST_CASE("knuth-bendix overflow leaves the backend uncertified") {
  // Baumslag-Solitar style relator: no finite shortlex system.
  auto p  = parse_presentation("< a, b | b^-1*a^2*b*a^-3 >");
  auto kb = kb_complete(initial_rules(p), 8);
  CHECK(std::holds_alternative<CompletionOverflow>(kb));
  auto rw = make_rewriting_backend(p, 8, false);
  CHECK_FALSE(rw->capabilities().word_problem_decidable);
  CHECK_FALSE(rw->capabilities().hopfian_certified);
  CHECK_THROWS_AS(rw->normal_form(Word::generator(0)), NotCertified);
}

TEST_CASE("rewriting backend from a rules file") {
  auto p     = parse_presentation("< a, b | a^2, b^3, a*b*a*b >");
  auto rules = parse_rules("# S3\na^2 -> 1\nb^3 -> 1\n a*b*a*b -> 1\n", p.generators());
  auto kb    = kb_complete(rules, 100);
  REQUIRE(std::holds_alternative<RewriteRules>(kb));
  RewritingBackend rw(p, std::get<RewriteRules>(kb), false);
  ElementCursor    c(rw);
  int              n = 0;
  while (c.next()) {
    ++n;
  }
  CHECK(n == 6);
  CHECK_THROWS_AS(parse_rules("a b\n", p.generators()), ParseError);
}

TEST_CASE("capabilities") {
  for (auto const& b : certified_rank2()) {
    CHECK(b->capabilities().word_problem_decidable);
    CHECK(b->capabilities().hopfian_certified);
    CHECK(b->capabilities().has_orbit_decider());
  }
  auto rw = make_rewriting_backend(s3_presentation(), 100, false);
  CHECK_FALSE(rw->capabilities().hopfian_certified);
  CHECK_FALSE(rw->capabilities().has_orbit_decider());
}
