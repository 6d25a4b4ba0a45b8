#include "doctest.h"
#include "wwp/error.hpp"
#include "wwp/etypes.hpp"

using namespace wwp;

namespace {
  Word g(std::uint32_t i, int sign = 1) {
    return Word::generator(i, sign);
  }
}  // namespace

TEST_CASE("exists_plus_probe") {
  auto z   = std::make_shared<FreeGroupBackend>(1);
  auto id  = exists_plus_probe(Endomorphism::identity(z), Budget::scalar(256));
  REQUIRE(std::holds_alternative<NoViolation>(id));
  CHECK(std::get<NoViolation>(id).depth == 256);

  Endomorphism square(z, {g(0).pow(2)});
  auto         v = exists_plus_probe(square, Budget::scalar(256));
  REQUIRE(std::holds_alternative<ExistsPlusViolation>(v));
  auto const& viol = std::get<ExistsPlusViolation>(v);
  CHECK(viol.terms.components == WordTuple{g(0).pow(2)});
  CHECK(viol.witness == WordTuple{g(0)});
  CHECK(viol.refutation == "orbit-decider");
  CHECK(recheck_violation(square, viol));

  // The formula itself: true at the image, false at the generator (bounded).
  CHECK(evaluate_bounded(viol.formula, square.images(), z, Budget{}).outcome == Outcome::HoldsSoFar);
  CHECK(evaluate_bounded(viol.formula, {g(0)}, z, Budget{}).outcome == Outcome::Unknown);
}

TEST_CASE("automorphisms of S3 preserve every system") {
  auto s3    = std::make_shared<CosetTableBackend>(s3_presentation(), 100);
  auto cap   = dichotomy_budget(*s3, 3).term_cap;
  auto endos = all_endomorphisms(s3);
  CHECK(endos.size() == 10);  // 6 automorphisms, 3 onto Z/2, the trivial map
  std::size_t automorphisms = 0;
  for (auto const& e : endos) {
    if (orbit_decide(*s3, e.images()).decision != Decision::InOrbit) {
      continue;
    }
    ++automorphisms;
    auto r = exists_plus_probe(e, Budget{cap, 36, cap * 36, 1 << 12});
    REQUIRE(std::holds_alternative<NoViolation>(r));
    CHECK(std::get<NoViolation>(r).depth == cap);
  }
  CHECK(automorphisms == 6);
}

TEST_CASE("refutation routes agree on S3") {
  auto s3 = std::make_shared<CosetTableBackend>(s3_presentation(), 100);
  TermCursor terms(2, 2);
  for (int i = 0; i < 300; ++i) {
    auto t = *terms.next();
    auto exhaustive = refute_at_generators(t, *s3).has_value();
    CHECK(exhaustive == !member_T_decide(t, *s3));
  }
}

TEST_CASE("theta_check_embedding") {
  auto z = std::make_shared<FreeGroupBackend>(1);
  Endomorphism square(z, {g(0).pow(2)});
  auto r = theta_check_embedding(square, Budget::scalar(64));
  REQUIRE(std::holds_alternative<RefutedByTheta>(r));
  auto const& refuted = std::get<RefutedByTheta>(r);
  CHECK(refuted.violation.terms.components == WordTuple{g(0).pow(2)});
  CHECK(refuted.violation.witness == WordTuple{g(0)});
  CHECK(recheck_violation(square, refuted.converted));

  auto f2 = std::make_shared<FreeGroupBackend>(2);
  Endomorphism swap(f2, {g(1), g(0)});
  for (std::uint64_t budget : {16, 256, 4096}) {
    CHECK(std::holds_alternative<ConsistentWithAut>(theta_check_embedding(swap, Budget::scalar(budget))));
  }

  auto d = std::make_shared<DihedralBackend>();
  Endomorphism doubling(d, {g(0).pow(2), g(1)});
  CHECK(std::holds_alternative<RefutedByTheta>(theta_check_embedding(doubling, Budget::scalar(256))));

  auto rw = make_rewriting_backend(s3_presentation(), 100, false);
  CHECK_THROWS_AS(theta_check_embedding(Endomorphism::identity(rw), Budget{}), NoOrbitDecider);
}

TEST_CASE("dichotomy on S3, F2 and Z") {
  auto s3 = std::make_shared<CosetTableBackend>(s3_presentation(), 100);
  auto rs = strongly_defined_probe(all_endomorphisms(s3), dichotomy_budget(*s3, 3));
  CHECK(rs.failures.empty());
  CHECK(rs.automorphisms == 6);
  CHECK(rs.refuted == 4);

  auto f2    = std::make_shared<FreeGroupBackend>(2);
  auto endos = sample_endomorphisms(f2, 200, 4, 7);
  auto rf    = strongly_defined_probe(endos, dichotomy_budget(*f2, 4));
  CHECK(rf.failures.empty());
  CHECK(rf.checked == 200);
  CHECK(rf.automorphisms + rf.refuted == 200);

  auto                      z = std::make_shared<FreeGroupBackend>(1);
  std::vector<Endomorphism> powers;
  for (int k = -16; k <= 16; ++k) {
    powers.emplace_back(z, WordTuple{g(0).pow(k)});
  }
  auto rz = strongly_defined_probe(powers, dichotomy_budget(*z, 16));
  CHECK(rz.failures.empty());
  for (std::size_t i = 0; i < powers.size(); ++i) {
    int k = static_cast<int>(i) - 16;
    CHECK((rz.cases[i].outcome == Dichotomy::Refuted) == (k != 1 && k != -1));
  }
}

TEST_CASE("sampling is seeded") {
  auto f2 = std::make_shared<FreeGroupBackend>(2);
  auto a  = sample_endomorphisms(f2, 50, 4, 11);
  auto b  = sample_endomorphisms(f2, 50, 4, 11);
  auto c  = sample_endomorphisms(f2, 50, 4, 12);
  CHECK(a == b);
  CHECK_FALSE(a == c);
  for (auto const& e : a) {
    for (auto const& w : e.images()) {
      CHECK(w.size() <= 4);
    }
  }
}
