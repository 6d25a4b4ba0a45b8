#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "wwp/error.hpp"
#include "wwp/io.hpp"

using namespace wwp;
using nlohmann::json;

namespace {
  Word random_word(std::mt19937& rng, std::size_t rank, std::size_t length) {
    std::uniform_int_distribution<std::uint32_t> gen(0, static_cast<std::uint32_t>(rank - 1));
    std::bernoulli_distribution                  flip;
    Word                                         w;
    for (std::size_t i = 0; i < length; ++i) {
      w = w * Word::generator(gen(rng), flip(rng) ? -1 : 1);
    }
    return w;
  }

  std::string temp_file(std::string const& name, std::string const& text) {
    auto path = (std::filesystem::temp_directory_path() / name).string();
    std::ofstream(path) << text;
    return path;
  }
}  // namespace

TEST_CASE("json round trips") {
  std::mt19937 rng(17);
  for (int i = 0; i < 200; ++i) {
    auto w = random_word(rng, 3, i % 12);
    CHECK(word_from_json(to_json(w)) == w);

    WordTuple t{w, random_word(rng, 3, 5), Word()};
    CHECK(word_tuple_from_json(to_json(t)) == t);

    auto tt = make_term_tuple(3, t);
    CHECK(term_tuple_from_json(to_json(tt)) == tt);
  }
  auto p = s3_presentation();
  CHECK(presentation_from_json(to_json(p)) == p);
  CHECK(presentation_from_json(json::parse(to_json(p).dump())) == p);
}

TEST_CASE("word json layout") {
  auto w = Word::generator(1) * Word::generator(0, -1);
  CHECK(to_json(w) == json::parse("[[1, 1], [0, -1]]"));
  CHECK(to_json(Word()) == json::array());
}

TEST_CASE("malformed json is rejected") {
  CHECK_THROWS_AS(word_from_json(json::parse("{}")), ParseError);
  CHECK_THROWS_AS(word_from_json(json::parse("[[0, 2]]")), ParseError);
  CHECK_THROWS_AS(word_from_json(json::parse("[[0]]")), ParseError);
  CHECK_THROWS_AS(word_from_json(json::parse("[[-1, 1]]")), ParseError);
  CHECK_THROWS_AS(word_tuple_from_json(json::parse("[1]")), ParseError);
  CHECK_THROWS_AS(term_tuple_from_json(json::parse("{\"arity\": 1}")), ParseError);
  CHECK_THROWS_AS(presentation_from_json(json::parse("{\"generators\": [1]}")), ParseError);
  // A relator over an unknown generator.
  CHECK_THROWS_AS(
      presentation_from_json(json::parse(R"({"generators": ["a"], "relators": [[[3, 1]]]})")),
      Error);
  // A term component over a variable beyond the arity.
  CHECK_THROWS_AS(
      term_tuple_from_json(json::parse(R"({"arity": 1, "components": [[[1, 1]]]})")), Error);
}

TEST_CASE("verdict json") {
  DihedralBackend d;
  auto            in = orbit_decide(d, {Word::generator(0, -1), Word::generator(0).pow(3) * Word::generator(1)});
  auto            j  = to_json(in, d.presentation());
  CHECK(j.at("decision") == "InOrbit");
  REQUIRE(j.contains("inverse_images"));
  CHECK(j.at("inverse_images").size() == 2);
  CHECK(j.at("inverse_images")[0].contains("text"));
  CHECK(j.at("inverse_images")[0].contains("letters"));

  FreeAbelianBackend z2(2);
  auto out = orbit_decide(z2, {Word::generator(0).pow(2), Word::generator(1)});
  j        = to_json(out, z2.presentation());
  CHECK(j.at("decision") == "NotInOrbit");
  CHECK(j.at("determinant") == "2");
}

TEST_CASE("make_backend") {
  BackendOptions o;
  CHECK(make_backend(o)->kind() == BackendKind::FreeGroup);
  CHECK(make_backend(o)->rank() == 2);

  o.kind = "abelian";
  o.rank = 3;
  CHECK(make_backend(o)->kind() == BackendKind::FreeAbelian);
  CHECK(make_backend(o)->rank() == 3);

  o.kind = "dihedral";
  CHECK(make_backend(o)->kind() == BackendKind::InfiniteDihedral);

  o.kind = "coset";
  CHECK_THROWS_AS(make_backend(o), Error);
  o.presentation = "s3";
  CHECK(make_backend(o)->order() == 6u);
  o.presentation = "z6";
  CHECK(make_backend(o)->order() == 6u);
  o.presentation = "< a | a^5 >";
  CHECK(make_backend(o)->order() == 5u);

  auto path      = temp_file("wwp_test_io_pres.txt", "# cyclic\n< a | a^4 >\n");
  o.presentation = path;
  CHECK(make_backend(o)->order() == 4u);
  std::filesystem::remove(path);

  o.kind = "nosuch";
  CHECK_THROWS_AS(make_backend(o), Error);

  o.kind         = "coset";
  o.presentation = "/nonexistent/wwp/presentation";
  CHECK_THROWS_AS(make_backend(o), Error);
}

TEST_CASE("rewriting backends from a rules file") {
  BackendOptions o;
  o.kind         = "rewrite";
  o.presentation = "< a | a^3 >";

  auto good   = temp_file("wwp_test_io_good.rules", "a^2 -> a^-1\na^-2 -> a\n");
  o.rules_file = good;
  auto b       = make_backend(o);
  auto a       = Word::generator(0);
  CHECK(b->normal_form(a.pow(4)) == a);
  CHECK(b->normal_form(a.pow(-4)) == a.inverse());
  CHECK(b->is_identity(a.pow(3)));
  std::filesystem::remove(good);

  // The relator does not reduce to 1, so nothing is certified.
  auto bad     = temp_file("wwp_test_io_bad.rules", "a^2 -> 1\n");
  o.rules_file = bad;
  b            = make_backend(o);
  CHECK_THROWS_AS(b->normal_form(a), NotCertified);
  std::filesystem::remove(bad);

  // Without a rules file the presentation is completed.
  o.rules_file = "";
  b            = make_backend(o);
  CHECK(b->normal_form(a.pow(7)) == b->normal_form(a));
}
