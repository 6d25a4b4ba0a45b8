#include <set>

#include "doctest.h"
#include "wwp/error.hpp"
#include "wwp/tsets.hpp"

using namespace wwp;

namespace {
  Word g(std::uint32_t i, int sign = 1) {
    return Word::generator(i, sign);
  }
  TermTuple terms(std::size_t k, WordTuple w) {
    return make_term_tuple(k, std::move(w));
  }
}  // namespace

TEST_CASE("member_T_semi") {
  FreeGroupBackend f2(2);
  auto             id = member_T_semi(terms(2, {g(0), g(1)}), {g(0), g(1)}, f2, Budget{});
  REQUIRE(id);
  CHECK(*id == WordTuple{g(0), g(1)});

  FreeGroupBackend z(1);
  for (std::uint64_t n : {16, 256, 4096}) {
    CHECK_FALSE(member_T_semi(terms(1, {g(0).pow(2)}), {g(0)}, z, Budget::scalar(n)));
  }
  auto sq = member_T_semi(terms(1, {g(0).pow(2)}), {g(0).pow(2)}, z, Budget{});
  REQUIRE(sq);
  CHECK(*sq == WordTuple{g(0)});
  CHECK_THROWS_AS(member_T_semi(terms(1, {g(0)}), {g(0), g(0)}, z, Budget{}), ArityMismatch);
}

TEST_CASE("member_T_decide") {
  FreeGroupBackend f2(2);
  CHECK(member_T_decide(terms(2, {g(1), g(0)}), f2));
  CHECK_FALSE(member_T_decide(terms(2, {g(0).pow(2), g(1)}), f2));
  FreeGroupBackend z(1);
  CHECK(member_T_decide(terms(1, {g(0, -1)}), z));
  auto rw = make_rewriting_backend(s3_presentation(), 100, false);
  CHECK_THROWS_AS(member_T_decide(terms(2, {g(0), g(1)}), *rw), NoOrbitDecider);
}

TEST_CASE("term_index agrees with the cursor") {
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 2}, {3, 2}, {2, 3}, {1, 4}}) {
    TermCursor c(n, k);
    std::uint64_t const count = k == 1 ? 4000 : 20000;
    for (std::uint64_t i = 0; i < count; ++i) {
      auto t = c.next();
      REQUIRE(t);
      REQUIRE(term_index(*t) == i);
    }
  }
}

TEST_CASE("enumerate_That") {
  auto z   = std::make_shared<FreeGroupBackend>(1);
  auto hat = enumerate_That(z, Budget::scalar(8));
  REQUIRE(hat.size() >= 2);
  CHECK(hat[0].components == WordTuple{Word()});
  CHECK(hat[1].components == WordTuple{g(0).pow(2)});
  for (auto const& t : enumerate_That(z, Budget::scalar(512))) {
    CHECK(t.components != WordTuple{g(0)});
    CHECK(t.components != WordTuple{g(0, -1)});
  }
  auto rw = make_rewriting_backend(s3_presentation(), 100, true);
  CHECK_THROWS_AS(enumerate_That(rw, Budget{}), NoOrbitDecider);
}

TEST_CASE("T-hat on S3 agrees with exhaustion") {
  auto        s3 = std::make_shared<CosetTableBackend>(s3_presentation(), 100);
  auto const& p  = s3->presentation();
  std::vector<WordTuple> models;
  for (std::uint32_t i = 0; i < 6; ++i) {
    for (std::uint32_t j = 0; j < 6; ++j) {
      WordTuple c{s3->element(i), s3->element(j)};
      if (satisfies_relators(p, *s3, c)) {
        models.push_back(c);
      }
    }
  }
  auto const a = s3->normal_forms(p.generator_tuple());
  // Every term tuple of each component length <= 3.
  std::uint64_t cap = 0;
  {
    TermCursor c(2, 2);
    while (auto t = c.next()) {
      if (total_length(t->components) > 6) {
        break;
      }
      ++cap;
    }
  }
  auto hat = enumerate_That(s3, Budget{cap, 1, cap, 64});
  std::set<std::uint64_t> emitted;
  for (auto const& t : hat) {
    emitted.insert(*term_index(t));
  }
  TermCursor c(2, 2);
  for (std::uint64_t i = 0; i < cap; ++i) {
    auto t = c.next();
    if (t->components[0].size() > 3 || t->components[1].size() > 3) {
      continue;
    }
    bool in_T = false;
    for (auto const& m : models) {
      in_T = in_T || s3->normal_forms(evaluate_terms(*t, m)) == a;
    }
    CHECK(emitted.count(i) == (in_T ? 0U : 1U));
  }
}

TEST_CASE("enumerate_That is prefix monotone and deterministic") {
  auto d     = std::make_shared<DihedralBackend>();
  auto small = enumerate_That(d, Budget::scalar(64));
  auto large = enumerate_That(d, Budget::scalar(512));
  REQUIRE(small.size() <= large.size());
  CHECK(std::equal(small.begin(), small.end(), large.begin()));
  CHECK(enumerate_That(d, Budget::scalar(512)) == large);
}

TEST_CASE("inclusion_probe") {
  auto s3 = std::make_shared<CosetTableBackend>(s3_presentation(), 100);
  auto a = g(0), b = g(1);
  auto r = inclusion_probe({a, b}, {a, b * b}, s3, Budget{});
  REQUIRE(r.endo_found);
  CHECK(r.endo_found->apply(WordTuple{a, b}) == s3->normal_forms({a, b * b}));

  auto same = inclusion_probe({a, b}, {a, b}, s3, Budget{});
  REQUIRE(same.endo_found);
  CHECK(*same.endo_found == Endomorphism::identity(s3));
  CHECK(same.rounds == 1);

  auto triv = inclusion_probe({a, b}, {Word(), Word()}, s3, Budget{});
  REQUIRE(triv.endo_found);
  CHECK(triv.endo_found->images() == WordTuple{Word(), Word()});

  // No endomorphism sends (a, a) to (a, b): a separating term exists.
  auto sep = inclusion_probe({a, a}, {a, b}, s3, Budget{});
  CHECK_FALSE(sep.endo_found);
  REQUIRE(sep.counterexample);
  auto const& [t, w] = *sep.counterexample;
  CHECK(s3->normal_forms(evaluate_terms(t, w)) == s3->normal_forms({a, a}));
  CHECK_FALSE(member_T_semi(t, {a, b}, *s3, Budget{64, 36, 64 * 36}));
}

TEST_CASE("dovetail_decide") {
  auto yes_at = [](std::uint64_t k) { return [k](std::uint64_t r) { return r >= k; }; };
  auto never  = [](std::uint64_t) { return false; };
  auto a      = dovetail_decide(yes_at(3), never, 10);
  REQUIRE(std::holds_alternative<Landed>(a));
  CHECK(std::get<Landed>(a).value);
  CHECK(std::get<Landed>(a).round == 3);
  auto b = dovetail_decide(never, yes_at(2), 10);
  CHECK_FALSE(std::get<Landed>(b).value);
  CHECK(std::holds_alternative<BudgetExhausted>(dovetail_decide(never, never, 5)));
  CHECK_THROWS_AS(dovetail_decide(yes_at(1), yes_at(1), 5), ContradictoryCertificates);

  auto f2 = std::make_shared<FreeGroupBackend>(2);
  auto d  = orbit_dovetail(f2, {g(1), g(0)}, 13);
  CHECK(d.decision == Decision::InOrbit);
  CHECK(d.decision == orbit_decide(*f2, {g(1), g(0)}).decision);
  auto n = orbit_dovetail(f2, {g(0).pow(2), g(1)}, 13);
  CHECK(n.decision == Decision::NotInOrbit);
}

TEST_CASE("semi deciders are coherent with the decider on small corpora") {
  std::vector<BackendPtr> backends{std::make_shared<FreeGroupBackend>(1),
                                   std::make_shared<FreeGroupBackend>(2),
                                   std::make_shared<DihedralBackend>(),
                                   std::make_shared<CosetTableBackend>(z6_presentation(), 100)};
  for (auto const& b : backends) {
    ThetaIndex    index(b);
    WitnessCursor tuples(*b, b->rank());
    for (int i = 0; i < 60; ++i) {
      auto t = tuples.next();
      if (!t) {
        break;
      }
      auto v = orbit_decide(*b, *t);
      auto d = orbit_dovetail(b, *t, 11, &index);
      CHECK(d.decision == v.decision);
      if (d.decision == Decision::NotInOrbit) {
        auto no = orbit_semi_no(b, *t, Budget::scalar(std::uint64_t{1} << (d.rounds)), &index);
        REQUIRE(no);
        CHECK(recheck(*b, *t, to_verdict(*no)));
      }
    }
  }
}
