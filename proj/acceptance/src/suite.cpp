// Criterion 8 and the suite driver.

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>

#include "report.hpp"
#include "wwp/acceptance.hpp"
#include "wwp/scott.hpp"

namespace wwp::acceptance {

  namespace {

    using Args = std::vector<std::string>;

    Args with(Args base, Args const& extra) {
      base.insert(base.end(), extra.begin(), extra.end());
      return base;
    }

    Args const kZ{"--backend", "abelian", "--rank", "1"};
    Args const kF2{"--backend", "free", "--rank", "2"};
    Args const kDinf{"--backend", "dihedral"};
    Args const kS3{"--backend", "coset", "--presentation", "s3"};

    struct Run {
      int         code = 0;
      std::string out;
      std::string err;

      friend bool operator==(Run const&, Run const&) = default;
    };

    Run run(CliRunner const& cli, Args const& args) {
      std::ostringstream out, err;
      Run                r;
      r.code = cli(args, out, err);
      r.out  = out.str();
      r.err  = err.str();
      return r;
    }

    std::string joined(Args const& args) {
      std::string s;
      for (auto const& a : args) {
        s += (s.empty() ? "" : " ") + (a.find(' ') == std::string::npos ? a : "'" + a + "'");
      }
      return s;
    }

  }  // namespace

  std::vector<Golden> golden_files() {
    std::vector<Golden> out;
    for (auto const& [name, backend] :
         {std::pair{"z", kZ}, std::pair{"f2", kF2}, std::pair{"dinf", kDinf}}) {
      for (std::string kind : {"theta", "sentence"}) {
        out.push_back({kind + "_" + name + "_64.sexp",
                       with({"scott", kind}, with(backend, {"--budget", "64", "--format", "sexp"}))});
      }
    }
    out.push_back({"theta_free1_16.sexp",
                   {"scott", "theta", "--backend", "free", "--rank", "1", "--budget", "16",
                    "--format", "sexp"}});
    out.push_back({"theta_f2_16.json",
                   with({"scott", "theta"}, with(kF2, {"--budget", "16", "--format", "json"}))});
    return out;
  }

  std::vector<Args> cli_matrix() {
    std::vector<Args> m{
        {"parse", "--presentation", "< a, b | a^2, b^3, a*b*a*b >"},
        {"parse", "--presentation", "< a, b | a^2, b^3, a*b*a*b >", "--json"},
        with({"wp"}, with(kDinf, {"s*r*s*r"})),
        with({"wp"}, with(kS3, {"a*b", "b^-1*a"})),
        with({"nf"}, with(kS3, {"b*a*b", "a^3"})),
        with({"nf"}, with(kZ, {"a^3*a^-5"})),
        with({"elements"}, with(kS3, {})),
        with({"elements"}, with(kDinf, {"--count", "9"})),
        with({"endo", "apply"}, with(kF2, {"--images", "x*y, y", "--word", "x*y^-1*x"})),
        with({"endo", "surjective"}, with(kF2, {"--images", "x*y, y"})),
        with({"endo", "left-inverse"}, with(kF2, {"--images", "y, x^-1"})),
        with({"tset", "enum"}, with(kF2, {"--count", "12"})),
        with({"tset", "member"}, with(kF2, {"--terms", "x2, x1"})),
        with({"tset", "member"}, with(kF2, {"--terms", "x1^2, x2", "--target", "x^2, y"})),
        with({"tset", "that"}, with(kS3, {"--budget", "32"})),
        with({"orbit", "decide"}, with(kF2, {"--tuple", "y, x"})),
        with({"orbit", "decide"}, with(kF2, {"--tuple", "x*y*x^-1, x^2", "--json"})),
        {"orbit", "decide", "--backend", "abelian", "--rank", "2", "--matrix", "2 0; 0 1"},
        with({"orbit", "decide"}, with(kDinf, {"--tuple", "r^-1, r^3*s", "--json"})),
        with({"orbit", "decide"}, with(kS3, {"--tuple", "a, b^-1"})),
        with({"orbit", "semi-yes"}, with(kF2, {"--tuple", "x*y, y", "--budget", "64"})),
        with({"orbit", "semi-no"}, with(kF2, {"--tuple", "x^2, y", "--budget", "64"})),
        with({"orbit", "dovetail"}, with(kDinf, {"--tuple", "r^2, s"})),
        with({"scott", "eval"}, with(kZ, {"--tuple", "a^2", "--budget", "64"})),
        with({"scott", "eval"}, with(kZ, {"--tuple", "a^-1", "--budget", "64"})),
        with({"scott", "theta"}, with(kDinf, {"--budget", "8", "--format", "json"})),
        with({"etypes", "probe"}, with(kF2, {"--images", "x^2, y", "--budget", "64"})),
        with({"etypes", "check"}, with(kF2, {"--samples", "20", "--seed", "7"})),
        with({"etypes", "check"}, with(kS3, {})),
        {"orbit", "decide", "--backend", "free", "--rank", "2", "--tuple", "x, "},
        {"nosuch"},
    };
    for (auto const& g : golden_files()) {
      m.push_back(g.args);
    }
    return m;
  }

  CriterionResult determinism_and_goldens(Options const& o) {
    Stopwatch clock;
    Faults    f;
    if (!o.cli) {
      f.fail("no command line runner");
      return finish(8, "determinism and golden files", f, "", clock, 0);
    }
    auto const matrix = cli_matrix();
    for (auto const& args : matrix) {
      auto first  = run(o.cli, args);
      auto second = run(o.cli, args);
      f.check(first == second, "double run differs: " + joined(args));
    }
    std::size_t matched = 0;
    for (auto const& g : golden_files()) {
      std::ifstream in(o.golden_dir + "/" + g.file, std::ios::binary);
      if (!in) {
        f.fail("missing golden file " + g.file);
        continue;
      }
      std::ostringstream want;
      want << in.rdbuf();
      auto got = run(o.cli, g.args);
      if (got.code == 0 && got.out == want.str()) {
        ++matched;
      } else {
        f.fail("golden mismatch: " + g.file);
      }
      if (g.file.ends_with(".sexp")) {
        auto const tag = g.file.starts_with("theta") ? ":tag Pi1" : ":tag d-Sigma2";
        f.check(want.str().find(tag) != std::string::npos, g.file + " lacks " + tag);
      }
    }
    // Classification by the library itself.
    std::vector<std::pair<std::string, BackendPtr>> groups{
        {"Z", std::make_shared<FreeAbelianBackend>(1)},
        {"F2", std::make_shared<FreeGroupBackend>(2)},
        {"D_inf", std::make_shared<DihedralBackend>()}};
    for (auto const& [label, b] : groups) {
      auto const budget = Budget::scalar(64);
      ComplexityTag const pi1{ComplexityTag::Class::Pi, 1, true};
      ComplexityTag const ds2{ComplexityTag::Class::DSigma, 2, true};
      f.check(classify_formula(build_theta_prefix(b, budget)) == pi1, label + ": Theta tag");
      f.check(classify_formula(emit_scott_sentence(b, budget)) == ds2, label + ": sentence tag");
    }
    return finish(8, "determinism and golden files", f,
                  std::to_string(matrix.size()) + " invocations run twice, "
                      + std::to_string(matched) + "/" + std::to_string(golden_files().size())
                      + " golden files match, tags Pi1 / d-Sigma2",
                  clock, 0);
  }

  std::vector<CriterionResult> run_all(Options const& o, std::vector<int> const& only) {
    using Fn = CriterionResult (*)(Options const&);
    Fn const fns[] = {finite_exhaustion,      free_group_decider, abelian_decider,
                      dihedral_closed_form,   semi_decider_coherence, theta_soundness,
                      embedding_dichotomy,    determinism_and_goldens};
    std::vector<CriterionResult> out;
    for (int id = 1; id <= 8; ++id) {
      if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) {
        continue;
      }
      if (o.log != nullptr) {
        *o.log << "criterion " << id << std::endl;
      }
      try {
        out.push_back(fns[id - 1](o));
      } catch (std::exception const& e) {
        out.push_back(CriterionResult{id, "criterion " + std::to_string(id), false,
                                      std::string("exception: ") + e.what(), 0, 0});
      }
    }
    return out;
  }

  std::string format_line(CriterionResult const& r) {
    std::ostringstream s;
    s << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << " (" << std::fixed
      << std::setprecision(1) << r.seconds << " s";
    if (r.time_limit > 0) {
      s << " of " << r.time_limit << " s";
    }
    s << "): " << r.detail;
    return s.str();
  }

}  // namespace wwp::acceptance
