#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "wwp/oracles.hpp"
#include "wwp/presentation.hpp"
#include "../tools/cli.hpp"

using namespace wwp;
namespace orc = wwp::oracle;

namespace {
  struct Run {
    int         code;
    std::string out, err;
  };

  Run run(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int                code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string golden(std::string const& name) {
    std::ifstream in(std::string(WWP_GOLDEN_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  using Membership = std::function<bool(std::vector<orc::Letters> const&)>;

  // a-bar lies in t(G^n) for the rank one groups iff t = y1^(+-1).
  bool rank_one_member(std::vector<orc::Letters> const& t) {
    auto e = orc::exponent_sums(t[0], 1)[0];
    return e == 1 || e == -1;
  }

  // In F2 this holds iff t is a basis. Greedy length reduction by
  // elementary Nielsen moves, then a check that the result is reduced.
  bool f2_member(std::vector<orc::Letters> t) {
    std::vector<std::vector<long long>> m;
    for (auto const& w : t) {
      m.push_back(orc::exponent_sums(w, 2));
    }
    auto d = orc::cofactor_det(m);
    if (d != 1 && d != -1) {
      return false;
    }
    for (bool moved = true; moved;) {
      moved = false;
      for (std::size_t i = 0; i < t.size() && !moved; ++i) {
        for (std::size_t j = 0; j < t.size() && !moved; ++j) {
          if (i == j) {
            continue;
          }
          for (auto const& v : {t[j], orc::inverse(t[j])}) {
            for (auto cand : {orc::concat(t[i], v), orc::concat(v, t[i])}) {
              if (cand.size() < t[i].size()) {
                t[i]  = cand;
                moved = true;
                break;
              }
            }
            if (moved) {
              break;
            }
          }
        }
      }
    }
    if (std::any_of(t.begin(), t.end(), [](auto const& w) { return w.empty(); })) {
      return false;
    }
    REQUIRE(orc::nielsen_reduced(t));
    return orc::signed_letter_permutation(t, 2);
  }

  // Brute force over every y-bar in D-infinity with shifts up to 24 that
  // satisfies the relators. A solution forces y-bar to generate, so the
  // shift of y2 solves a linear equation with coefficients bounded by the
  // term length, well inside the range for the terms used here.
  bool dinf_member(std::vector<orc::Letters> const& t) {
    orc::Affine const r{1, 1}, s{-1, 0}, id{1, 0};
    std::vector<orc::Affine> elems;
    for (int sign : {1, -1}) {
      for (long long k = -24; k <= 24; ++k) {
        elems.push_back({sign, k});
      }
    }
    for (auto const& y1 : elems) {
      for (auto const& y2 : elems) {
        if (!(orc::compose(y2, y2) == id)) {
          continue;
        }
        auto y21 = orc::compose(y2, y1);
        if (!(orc::compose(y21, y21) == id)) {
          continue;
        }
        if (orc::eval_dihedral(t[0], y1, y2) == r && orc::eval_dihedral(t[1], y1, y2) == s) {
          return true;
        }
      }
    }
    return false;
  }

  // The conjunct terms of the theta stream in a golden s-expression, in
  // order.
  std::vector<std::vector<orc::Letters>> stream_items(std::string const& text, std::size_t n,
                                                      std::uint64_t& cursor, std::size_t& count) {
    std::smatch head;
    REQUIRE(std::regex_search(text, head,
                              std::regex(R"(\(and\* :source theta :cursor (\d+) :items (\d+))")));
    cursor = std::stoull(head[1]);
    count  = std::stoull(head[2]);

    auto const names = variable_names(n, "y");
    std::vector<std::vector<orc::Letters>> items;
    std::istringstream in(text);
    std::regex const   eq(R"(\(= x(\d+) ([^ )]+)\))");
    for (std::string line; std::getline(in, line);) {
      if (line.find("(forall") == std::string::npos) {
        continue;
      }
      std::vector<orc::Letters> t(n);
      for (std::sregex_iterator it(line.begin(), line.end(), eq), end; it != end; ++it) {
        auto i = std::stoul((*it)[1]) - 1;
        t.at(i) = orc::letters_of(parse_word((*it)[2].str(), names));
      }
      items.push_back(t);
      // The sentence repeats the stream inside psi; the first copy is enough.
      if (items.size() == count) {
        break;
      }
    }
    return items;
  }

  void check_theta_golden(std::string const& file, std::size_t n, Membership const& member) {
    INFO(file);
    std::uint64_t cursor = 0;
    std::size_t   count  = 0;
    auto          items  = stream_items(golden(file), n, cursor, count);
    CHECK(items.size() == count);

    std::vector<std::vector<orc::Letters>> expected;
    TermCursor                             c(n, n);
    for (std::uint64_t i = 0; i < cursor; ++i) {
      auto t = c.next();
      REQUIRE(t);
      std::vector<orc::Letters> l;
      for (auto const& w : t->components) {
        l.push_back(orc::letters_of(w));
      }
      if (!member(l)) {
        expected.push_back(l);
      }
    }
    CHECK(items == expected);
  }
}  // namespace

TEST_CASE("golden theta streams agree with independent membership oracles") {
  check_theta_golden("theta_z_64.sexp", 1, rank_one_member);
  check_theta_golden("sentence_z_64.sexp", 1, rank_one_member);
  check_theta_golden("theta_free1_16.sexp", 1, rank_one_member);
  check_theta_golden("theta_f2_64.sexp", 2, f2_member);
  check_theta_golden("sentence_f2_64.sexp", 2, f2_member);
  check_theta_golden("theta_dinf_64.sexp", 2, dinf_member);
  check_theta_golden("sentence_dinf_64.sexp", 2, dinf_member);
}

TEST_CASE("json theta golden has the oracle item count") {
  auto j      = nlohmann::json::parse(golden("theta_f2_16.json"));
  auto stream = j.at("formula").at("stream");
  CHECK(stream.at("cursor") == 16);
  CHECK(stream.at("item_tag") == "Pi1");

  std::size_t expect = 0;
  TermCursor  c(2, 2);
  for (int i = 0; i < 16; ++i) {
    auto t = c.next();
    std::vector<orc::Letters> l;
    for (auto const& w : t->components) {
      l.push_back(orc::letters_of(w));
    }
    expect += f2_member(l) ? 0 : 1;
  }
  CHECK(stream.at("items").size() == expect);
}

TEST_CASE("goldens are reproduced by the command line") {
  auto r = run({"scott", "theta", "--backend", "free", "--rank", "1", "--budget", "16", "--format",
                "sexp"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == golden("theta_free1_16.sexp"));
}

TEST_CASE("exit codes") {
  std::vector<std::string> const f2{"--backend", "free", "--rank", "2"};
  auto with = [](std::vector<std::string> a, std::vector<std::string> const& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };

  auto r = run(with({"orbit", "decide", "--tuple", "y, x"}, f2));
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "InOrbit\n");

  r = run(with({"orbit", "decide", "--tuple", "x^2, y"}, f2));
  CHECK(r.code == cli::kNegative);
  CHECK(r.out.rfind("NotInOrbit", 0) == 0);

  r = run({"orbit", "decide", "--backend", "abelian", "--rank", "2", "--matrix", "2 0; 0 1"});
  CHECK(r.code == cli::kNegative);
  CHECK(r.out == "NotInOrbit det=2\n");

  r = run(with({"orbit", "semi-yes", "--tuple", "x*y, y", "--budget", "64"}, f2));
  CHECK(r.code == cli::kOk);
  r = run(with({"orbit", "semi-no", "--tuple", "x*y, y", "--budget", "64"}, f2));
  CHECK(r.code == cli::kUnknown);

  r = run({"wp", "--backend", "dihedral", "s*r*s*r"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "true\n");
  r = run({"wp", "--backend", "dihedral", "s*r"});
  CHECK(r.code == cli::kNegative);

  CHECK(run({"nosuch"}).code == cli::kUsage);
  CHECK(run({"orbit", "decide", "--rank", "two"}).code == cli::kUsage);
  CHECK(run(with({"orbit", "decide", "--tuple", "x, "}, f2)).code == cli::kBadInput);
  CHECK(run(with({"orbit", "decide", "--tuple", "x, q"}, f2)).code == cli::kBadInput);
  CHECK(run({"parse", "--presentation", "< a | b >"}).code == cli::kBadInput);

  // No orbit decider for an uncertified rewriting system.
  r = run({"orbit", "decide", "--backend", "rewrite", "--presentation", "< a, b | a*b*a^-1*b^-2 >",
           "--kb-cap", "4", "--tuple", "a, b"});
  CHECK(r.code == cli::kUnknown);
}

TEST_CASE("batch orbit decisions do not depend on the job count") {
  auto path = std::filesystem::temp_directory_path() / "wwp_test_cli_batch.txt";
  {
    std::ofstream f(path);
    f << "# pairs\n"
      << "y, x\n"
      << "x^2, y\n"
      << "\n"
      << "x*y*x^-1, x^2\n"
      << "x*y, y^-1\n"
      << "x, q\n"
      << "y^-1*x, y\n";
  }
  std::vector<std::string> base{"orbit", "decide", "--backend", "free", "--rank", "2", "--batch",
                                path.string()};
  auto one  = run([&] { auto a = base; a.insert(a.end(), {"--jobs", "1"}); return a; }());
  auto four = run([&] { auto a = base; a.insert(a.end(), {"--jobs", "4"}); return a; }());
  std::filesystem::remove(path);

  CHECK(one.out == four.out);
  CHECK(one.code == four.code);
  CHECK(one.code == cli::kBadInput);
  std::istringstream lines(one.out);
  std::vector<std::string> got;
  for (std::string l; std::getline(lines, l);) {
    got.push_back(l);
  }
  REQUIRE(got.size() == 6);
  CHECK(got[0] == "y, x\tInOrbit");
  CHECK(got[1].rfind("x^2, y\tNotInOrbit", 0) == 0);
  CHECK(got[4].find("error") != std::string::npos);
  CHECK(got[5] == "y^-1*x, y\tInOrbit");
}

TEST_CASE("json output carries the schema version") {
  auto r = run({"orbit", "decide", "--backend", "dihedral", "--tuple", "r^-1, r^3*s", "--json"});
  CHECK(r.code == cli::kOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("schema_version") == 1);
  CHECK(j.at("decision") == "InOrbit");
}

TEST_CASE("repeated runs are byte identical") {
  std::vector<std::vector<std::string>> cases{
      {"etypes", "check", "--backend", "free", "--rank", "2", "--samples", "10", "--seed", "3"},
      {"tset", "that", "--backend", "coset", "--presentation", "s3", "--budget", "32"},
      {"scott", "sentence", "--backend", "dihedral", "--budget", "12"},
  };
  for (auto const& c : cases) {
    auto a = run(c), b = run(c);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
  }
}

TEST_CASE("tset enum marks membership") {
  auto r = run({"tset", "enum", "--backend", "free", "--rank", "2", "--count", "49"});
  CHECK(r.code == cli::kOk);
  std::istringstream in(r.out);
  std::vector<std::string> members;
  for (std::string l; std::getline(in, l);) {
    auto j = nlohmann::json::parse(l);
    if (j.at("status") == "member") {
      members.push_back(j.at("terms"));
    }
  }
  CHECK(members == std::vector<std::string>{"(x1, x2)", "(x1, x2^-1)", "(x1^-1, x2)",
                                            "(x1^-1, x2^-1)", "(x2, x1)", "(x2, x1^-1)",
                                            "(x2^-1, x1)", "(x2^-1, x1^-1)"});

  r = run({"tset", "enum", "--backend", "abelian", "--rank", "1", "--count", "3", "--tuple", "a^2"});
  CHECK(r.out.find(R"x({"index":1,"status":"member","terms":"(x1)","witness":"a^2"})x")
        != std::string::npos);
}

TEST_CASE("etypes probe json report") {
  auto r = run({"etypes", "probe", "--backend", "free", "--rank", "2", "--samples", "6", "--seed",
                "5", "--json"});
  CHECK(r.code == cli::kOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("schema_version") == 1);
  CHECK(j.at("checked") == 6);
  CHECK(j.at("failures") == 0);
  CHECK(j.at("cases").size() == 6);
  CHECK(j.at("automorphisms").get<int>() + j.at("refuted").get<int>() == 6);
}
