#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <memory>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wwp/acceptance.hpp"
#include "wwp/error.hpp"
#include "wwp/etypes.hpp"
#include "wwp/io.hpp"
#include "wwp/morphisms.hpp"
#include "wwp/orbit.hpp"
#include "wwp/presentation.hpp"
#include "wwp/scott.hpp"
#include "wwp/tsets.hpp"

namespace wwp::cli {

  namespace {

    using nlohmann::json;

    struct Settings {
      BackendOptions backend;
      std::uint64_t  budget = 0;  // 0: the subcommand's default
      bool           json   = false;
      std::uint64_t  seed   = 1;
    };

    struct Io {
      std::ostream& out;
      std::ostream& err;
    };

    Budget budget_or(Settings const& s, std::uint64_t fallback) {
      return Budget::scalar(s.budget != 0 ? s.budget : fallback);
    }

    std::vector<std::string> const& names(Backend const& b) {
      return b.presentation().generators();
    }

    std::string show(Backend const& b, WordTuple const& t) {
      return format_word_tuple(t, names(b));
    }

    WordTuple read_tuple(Backend const& b, std::string const& text) {
      auto t = parse_word_tuple(text, names(b));
      if (t.size() != b.rank()) {
        throw ArityMismatch("expected " + std::to_string(b.rank()) + " entries, got "
                            + std::to_string(t.size()));
      }
      return t;
    }

    TermTuple read_terms(Backend const& b, std::string const& text) {
      auto const n = b.rank();
      auto       t = make_term_tuple(n, parse_word_tuple(text, variable_names(n, "x")));
      if (t.size() != n) {
        throw ArityMismatch("expected " + std::to_string(n) + " terms, got "
                            + std::to_string(t.size()));
      }
      return t;
    }

    // Rows of exponents, one word per row.
    WordTuple matrix_tuple(Backend const& b, std::string const& text) {
      auto const m = parse_matrix(text);
      if (m.rows() != b.rank() || m.cols() != b.rank()) {
        throw ArityMismatch("matrix must be " + std::to_string(b.rank()) + " x "
                            + std::to_string(b.rank()));
      }
      WordTuple out;
      for (std::size_t i = 0; i < m.rows(); ++i) {
        Word w;
        for (std::size_t j = 0; j < m.cols(); ++j) {
          w = w * Word::generator(static_cast<std::uint32_t>(j)).pow(m(i, j).convert_to<long long>());
        }
        out.push_back(std::move(w));
      }
      return out;
    }

    int code_of(Decision d) {
      switch (d) {
        case Decision::InOrbit: return kOk;
        case Decision::NotInOrbit: return kNegative;
        default: return kUnknown;
      }
    }

    std::string describe(Backend const& b, OrbitVerdict const& v) {
      std::string s = to_string(v.decision);
      if (v.decision == Decision::NotInOrbit) {
        if (v.failed_relator) {
          s += " failed-relator=" + format_word(b.presentation().relators()[*v.failed_relator],
                                                names(b));
        }
        if (v.determinant && abs(*v.determinant) != 1) {
          s += " det=" + v.determinant->str();
        }
        if (v.violation) {
          s += " conjunct=" + format_term_tuple(v.violation->terms) + " witness=("
               + show(b, v.violation->witness) + ")";
        }
      }
      if (v.decision == Decision::Unknown && !v.note.empty()) {
        s += " (" + v.note + ")";
      }
      return s;
    }

    json verdict_json(Backend const& b, WordTuple const& t, OrbitVerdict const& v) {
      json j              = to_json(v, b.presentation());
      j["schema_version"] = kSchemaVersion;
      j["tuple"]          = show(b, t);
      return j;
    }

    ////////////////////////////////////////////////////////////////////////
    // orbit
    ////////////////////////////////////////////////////////////////////////

    struct OrbitArgs {
      std::string   action;
      std::string   tuple;
      std::string   matrix;
      std::string   batch;
      std::size_t   jobs   = 1;
      std::uint64_t rounds = 13;
    };

    // One query; returns the exit code and the printed line.
    std::pair<int, std::string> orbit_one(BackendPtr const& b, WordTuple const& t,
                                          OrbitArgs const& a, Settings const& s,
                                          ThetaIndex& index) {
      OrbitVerdict v;
      std::string  extra;
      if (a.action == "decide") {
        v = orbit_decide(*b, t);
      } else if (a.action == "semi-yes") {
        if (auto y = orbit_semi_yes(*b, t, budget_or(s, 4096))) {
          v     = to_verdict(*y, *b);
          extra = " terms=" + format_term_tuple(y->terms);
        } else {
          v.method = "semi-yes";
        }
      } else if (a.action == "semi-no") {
        if (auto n = orbit_semi_no(b, t, budget_or(s, 4096), &index)) {
          v = to_verdict(*n);
        } else {
          v.method = "semi-no";
        }
      } else {
        auto d     = orbit_dovetail(b, t, a.rounds, &index);
        v.decision = d.decision;
        v.method   = "dovetail";
        extra      = " round=" + std::to_string(d.rounds);
      }
      if (s.json) {
        auto j = verdict_json(*b, t, v);
        if (a.action == "dovetail") {
          j["rounds"] = std::stoull(extra.substr(7));
        }
        return {code_of(v.decision), j.dump()};
      }
      return {code_of(v.decision), describe(*b, v) + extra};
    }

    int orbit_command(OrbitArgs const& a, Settings const& s, Io io) {
      auto b = make_backend(s.backend);
      if (a.batch.empty()) {
        if (a.tuple.empty() == a.matrix.empty()) {
          throw CLI::ValidationError("orbit", "give exactly one of --tuple and --matrix");
        }
        auto       t = a.tuple.empty() ? matrix_tuple(*b, a.matrix) : read_tuple(*b, a.tuple);
        ThetaIndex index(b);
        auto [code, line] = orbit_one(b, t, a, s, index);
        io.out << line << '\n';
        return code;
      }
      // Batch: one tuple per line; '#' comments and blank lines are skipped.
      std::vector<std::string> lines;
      {
        std::istringstream in(read_text_file(a.batch));
        for (std::string line; std::getline(in, line);) {
          auto first = line.find_first_not_of(" \t\r");
          if (first != std::string::npos && line[first] != '#') {
            lines.push_back(line);
          }
        }
      }
      auto const jobs = std::max<std::size_t>(1, std::min(a.jobs, lines.size()));
      std::vector<std::pair<int, std::string>> results(lines.size());
      auto work = [&](std::size_t first) {
        ThetaIndex index(b);
        for (auto i = first; i < lines.size(); i += jobs) {
          try {
            auto t     = read_tuple(*b, lines[i]);
            results[i] = orbit_one(b, t, a, s, index);
            results[i].second = lines[i] + "\t" + results[i].second;
          } catch (Error const& e) {
            results[i] = {kBadInput, lines[i] + "\terror: " + e.what()};
          }
        }
      };
      std::vector<std::future<void>> pending;
      for (std::size_t j = 1; j < jobs; ++j) {
        pending.push_back(std::async(std::launch::async, work, j));
      }
      work(0);
      for (auto& p : pending) {
        p.get();
      }
      int code = kOk;
      for (auto const& [c, line] : results) {
        io.out << line << '\n';
        if (c == kBadInput) {
          code = kBadInput;
        } else if (c == kUnknown && code == kOk) {
          code = kUnknown;
        }
      }
      return code;
    }

    ////////////////////////////////////////////////////////////////////////
    // scott
    ////////////////////////////////////////////////////////////////////////

    struct ScottArgs {
      std::string action;
      std::string format = "sexp";
      std::string tuple;
      bool        sentence = false;
    };

    int scott_command(ScottArgs const& a, Settings const& s, Io io) {
      auto       b      = make_backend(s.backend);
      auto const budget = budget_or(s, 64);
      ThetaIndex index(b);
      if (a.action == "theta" || a.action == "sentence") {
        auto doc = a.action == "theta" ? build_theta_prefix(b, budget, &index)
                                       : emit_scott_sentence(b, budget, &index);
        auto text = a.format == "json" ? to_json(doc) : to_sexp(doc);
        io.out << text << (text.ends_with('\n') ? "" : "\n");
        return kOk;
      }
      auto doc = a.sentence ? emit_scott_sentence(b, budget, &index)
                            : build_theta_prefix(b, budget, &index);
      WordTuple assignment;
      if (!a.sentence) {
        if (a.tuple.empty()) {
          throw CLI::ValidationError("scott eval", "--tuple is required for Theta");
        }
        assignment = read_tuple(*b, a.tuple);
      }
      auto e = evaluate_bounded(doc, assignment, b, budget, &index);
      if (s.json) {
        json j{{"schema_version", kSchemaVersion},
               {"outcome", to_string(e.outcome)},
               {"exact", e.exact},
               {"path", e.path}};
        if (e.outcome == Outcome::Falsified) {
          j["witness"] = format_word_tuple(e.witness, doc.var_names);
          if (e.violation) {
            j["conjunct"] = format_term_tuple(e.violation->terms);
          }
        }
        io.out << j.dump() << '\n';
      } else {
        io.out << to_string(e.outcome);
        if (e.outcome == Outcome::HoldsSoFar && e.exact) {
          io.out << " exact";
        }
        if (e.outcome == Outcome::Falsified) {
          io.out << " path=";
          for (std::size_t i = 0; i < e.path.size(); ++i) {
            io.out << (i == 0 ? "" : ".") << e.path[i];
          }
          io.out << " witness=(" << show(*b, e.witness) << ")";
          if (e.violation) {
            io.out << " conjunct=" << format_term_tuple(e.violation->terms);
          }
        }
        io.out << '\n';
      }
      switch (e.outcome) {
        case Outcome::HoldsSoFar: return kOk;
        case Outcome::Falsified: return kNegative;
        default: return kUnknown;
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // etypes
    ////////////////////////////////////////////////////////////////////////

    struct EtypesArgs {
      std::string action;
      std::string images;
      std::size_t samples = 100;
      std::size_t length  = 4;
    };

    int etypes_command(EtypesArgs const& a, Settings const& s, Io io) {
      auto b = make_backend(s.backend);
      // probe without --images is the same sampled run as check.
      if (a.action == "probe" && !a.images.empty()) {
        Endomorphism e(b, read_tuple(*b, a.images));
        auto const   budget  = budget_or(s, 4096);
        bool         refuted = false;
        auto         ex      = exists_plus_probe(e, budget);
        if (auto const* v = std::get_if<ExistsPlusViolation>(&ex)) {
          refuted = true;
          io.out << "exists-plus: violated by " << format_term_tuple(v->terms) << " witness=("
                 << show(*b, v->witness) << ") refuted=" << v->refutation << '\n';
        } else {
          io.out << "exists-plus: no violation among " << std::get<NoViolation>(ex).depth
                 << " term tuples\n";
        }
        try {
          auto th = theta_check_embedding(e, budget);
          if (auto const* r = std::get_if<RefutedByTheta>(&th)) {
            refuted = true;
            io.out << "theta: falsified by conjunct " << format_term_tuple(r->violation.terms)
                   << " witness=(" << show(*b, r->violation.witness) << ")\n";
          } else {
            io.out << "theta: holds so far\n";
          }
        } catch (NoOrbitDecider const&) {
          io.out << "theta: unavailable, no orbit decider\n";
        }
        return refuted ? kNegative : kOk;
      }
      std::vector<Endomorphism> endos;
      if (b->order() && *b->order() <= 1000) {
        endos = all_endomorphisms(b);
      } else {
        endos = sample_endomorphisms(b, a.samples, a.length, s.seed);
      }
      std::size_t longest = 0;
      for (auto const& e : endos) {
        for (auto const& w : e.images()) {
          longest = std::max(longest, w.size());
        }
      }
      auto const budget = s.budget != 0 ? Budget::scalar(s.budget) : dichotomy_budget(*b, longest);
      auto const report = strongly_defined_probe(endos, budget);
      if (s.json) {
        auto cases = json::array();
        for (auto const& c : report.cases) {
          cases.push_back({{"images", show(*b, c.images)},
                           {"outcome", to_string(c.outcome)},
                           {"detail", c.detail}});
        }
        json j{{"schema_version", kSchemaVersion},
               {"seed", s.seed},
               {"checked", report.checked},
               {"automorphisms", report.automorphisms},
               {"refuted", report.refuted},
               {"failures", report.failures.size()},
               {"cases", std::move(cases)}};
        io.out << j.dump(2) << '\n';
        return report.failures.empty() ? kOk : kNegative;
      }
      for (auto const& c : report.cases) {
        io.out << show(*b, c.images) << '\t' << to_string(c.outcome);
        if (!c.detail.empty()) {
          io.out << '\t' << c.detail;
        }
        io.out << '\n';
      }
      io.out << "checked " << report.checked << " automorphisms " << report.automorphisms
             << " refuted " << report.refuted << " failures " << report.failures.size() << '\n';
      return report.failures.empty() ? kOk : kNegative;
    }

    ////////////////////////////////////////////////////////////////////////
    // Smaller subcommands
    ////////////////////////////////////////////////////////////////////////

    int parse_command(Settings const& s, Io io) {
      if (s.backend.presentation.empty()) {
        throw CLI::ValidationError("parse", "--presentation is required");
      }
      BackendOptions o = s.backend;
      o.kind           = "free";
      auto first       = o.presentation.find_first_not_of(" \t\r\n");
      auto p = first != std::string::npos && o.presentation[first] == '<'
                   ? parse_presentation(o.presentation)
                   : o.presentation == "s3"   ? s3_presentation()
                     : o.presentation == "z6" ? z6_presentation()
                                              : parse_presentation(read_text_file(o.presentation));
      if (s.json) {
        auto j              = to_json(p);
        j["schema_version"] = kSchemaVersion;
        io.out << j.dump(2) << '\n';
      } else {
        io.out << format_presentation(p) << '\n';
      }
      return kOk;
    }

    int wp_command(std::vector<std::string> const& words, Settings const& s, Io io) {
      if (words.empty() || words.size() > 2) {
        throw CLI::ValidationError("wp", "give one word (identity test) or two (equality)");
      }
      auto b  = make_backend(s.backend);
      auto u  = parse_word(words[0], names(*b));
      bool eq = words.size() == 1 ? b->is_identity(u) : b->equal(u, parse_word(words[1], names(*b)));
      io.out << (eq ? "true" : "false") << '\n';
      return eq ? kOk : kNegative;
    }

    int nf_command(std::vector<std::string> const& words, Settings const& s, Io io) {
      auto b = make_backend(s.backend);
      for (auto const& w : words) {
        io.out << format_word(b->normal_form(parse_word(w, names(*b))), names(*b)) << '\n';
      }
      return kOk;
    }

    int elements_command(std::uint64_t count, Settings const& s, Io io) {
      auto          b = make_backend(s.backend);
      ElementCursor cursor(*b);
      if (count == 0) {
        count = b->order() ? *b->order() : 16;
      }
      for (std::uint64_t i = 0; i < count; ++i) {
        auto w = cursor.next();
        if (!w) {
          break;
        }
        io.out << i << '\t' << format_word(*w, names(*b)) << '\n';
      }
      return kOk;
    }

    struct EndoArgs {
      std::string action;
      std::string images;
      std::string word;
    };

    int endo_command(EndoArgs const& a, Settings const& s, Io io) {
      auto         b = make_backend(s.backend);
      Endomorphism e(b, read_tuple(*b, a.images));
      auto const   budget = budget_or(s, 4096);
      if (a.action == "apply") {
        if (a.word.empty()) {
          throw CLI::ValidationError("endo apply", "--word is required");
        }
        io.out << format_word(b->normal_form(e.apply(parse_word(a.word, names(*b)))), names(*b))
               << '\n';
        return kOk;
      }
      if (a.action == "surjective") {
        if (auto t = surjectivity_semi(e, budget)) {
          io.out << "surjective generators=" << format_term_tuple(*t) << "\n";
          return kOk;
        }
        io.out << "Unknown\n";
        return kUnknown;
      }
      if (auto l = left_inverse_semi(e, budget)) {
        io.out << "left-inverse images=(" << show(*b, l->images()) << ")\n";
        return kOk;
      }
      io.out << "Unknown\n";
      return kUnknown;
    }

    struct TsetArgs {
      std::string   action;
      std::uint64_t count = 16;
      std::string   terms;
      std::string   target;
    };

    int tset_command(TsetArgs const& a, Settings const& s, Io io) {
      auto b = make_backend(s.backend);
      auto n = b->rank();
      if (a.action == "enum") {
        // Status against b: decided exactly at the generators when possible,
        // otherwise "member" with a witness or "unknown" within the budget.
        std::optional<WordTuple> target;
        if (!a.target.empty()) {
          target = read_tuple(*b, a.target);
        }
        bool const exact  = !target && b->capabilities().has_orbit_decider();
        auto const budget = budget_or(s, 256);
        auto const b_bar  = target ? *target : b->presentation().generator_tuple();
        TermCursor cursor(n, n);
        for (std::uint64_t i = 0; i < a.count; ++i) {
          auto t    = cursor.next();
          json line = {{"index", i}, {"terms", format_term_tuple(*t)}};
          if (exact) {
            line["status"] = member_T_decide(*t, *b) ? "member" : "not-member";
          } else if (auto w = member_T_semi(*t, b_bar, *b, budget)) {
            line["status"]  = "member";
            line["witness"] = show(*b, *w);
          } else {
            line["status"] = "unknown";
          }
          io.out << line.dump() << '\n';
        }
        return kOk;
      }
      if (a.action == "that") {
        ThetaIndex  index(b);
        auto const  budget = budget_or(s, 64);
        auto const  count  = index.conjunct_count(budget.term_cap);
        for (std::size_t i = 0; i < count; ++i) {
          io.out << json{{"conjunct", i},
                         {"index", index.conjunct_term_index(i)},
                         {"terms", format_term_tuple(index.conjunct(i))}}
                        .dump()
                 << '\n';
        }
        return kOk;
      }
      if (a.terms.empty()) {
        throw CLI::ValidationError("tset member", "--terms is required");
      }
      auto t = read_terms(*b, a.terms);
      if (a.target.empty()) {
        bool in = member_T_decide(t, *b);
        io.out << (in ? "member" : "not-member") << '\n';
        return in ? kOk : kNegative;
      }
      if (auto w = member_T_semi(t, read_tuple(*b, a.target), *b, budget_or(s, 4096))) {
        io.out << "member witness=(" << show(*b, *w) << ")\n";
        return kOk;
      }
      io.out << "Unknown\n";
      return kUnknown;
    }

    struct OracleArgs {
      std::string only;
      std::string golden = WWP_GOLDEN_DIR;
      bool        verbose = false;
    };

    int oracle_command(OracleArgs const& a, Io io) {
      std::vector<int> only;
      std::istringstream in(a.only);
      for (std::string part; std::getline(in, part, ',');) {
        if (!part.empty()) {
          only.push_back(std::stoi(part));
        }
      }
      acceptance::Options o;
      o.cli        = [](std::vector<std::string> const& args, std::ostream& out,
                 std::ostream& err) { return run(args, out, err); };
      o.golden_dir = a.golden;
      o.log        = a.verbose ? &io.err : nullptr;
      auto results = acceptance::run_all(o, only);
      std::size_t passed = 0;
      for (auto const& r : results) {
        io.out << acceptance::format_line(r) << '\n';
        passed += r.passed ? 1 : 0;
      }
      io.out << passed << "/" << results.size() << " criteria passed\n";
      return passed == results.size() ? kOk : kNegative;
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weak Whitehead problem toolkit: orbit deciders, T-sets and Scott sentences",
                 "wwp"};
    app.require_subcommand(1);
    app.fallthrough();

    Settings s;
    std::string kind = "free";
    app.add_option("--backend", kind, "free, abelian, dihedral, coset or rewrite")
        ->check(CLI::IsMember({"free", "abelian", "dihedral", "coset", "rewrite"}));
    app.add_option("--rank", s.backend.rank, "rank of free and free abelian backends");
    app.add_option("--presentation", s.backend.presentation,
                   "'< gens | relators >', s3, z6 or a file");
    app.add_option("--coset-cap", s.backend.coset_cap, "coset enumeration limit");
    app.add_option("--kb-cap", s.backend.kb_cap, "Knuth-Bendix rule limit");
    app.add_option("--rules", s.backend.rules_file, "rewriting rules file (lhs -> rhs per line)");
    app.add_flag("--hopfian", s.backend.hopfian, "assert that the rewriting group is Hopfian");
    app.add_option("--budget", s.budget, "scalar budget");
    app.add_flag("--json", s.json, "JSON output");
    app.add_option("--seed", s.seed, "random seed");

    auto* parse = app.add_subcommand("parse", "parse and print a presentation");

    std::vector<std::string> words;
    auto* wp = app.add_subcommand("wp", "word problem: identity or equality");
    wp->add_option("words", words, "one or two words")->required();
    auto* nf = app.add_subcommand("nf", "normal forms");
    std::vector<std::string> nf_words;
    nf->add_option("words", nf_words)->required();

    std::uint64_t count = 0;
    auto* elements = app.add_subcommand("elements", "elements in enumeration order");
    elements->add_option("--count", count, "how many (default: all of a finite group, else 16)");

    EndoArgs endo_args;
    auto*    endo = app.add_subcommand("endo", "endomorphisms given by generator images");
    endo->add_option("action", endo_args.action, "apply, surjective or left-inverse")
        ->required()
        ->check(CLI::IsMember({"apply", "surjective", "left-inverse"}));
    endo->add_option("--images", endo_args.images, "images of the generators")->required();
    endo->add_option("--word", endo_args.word, "word to map (apply)");

    TsetArgs tset_args;
    auto*    tset = app.add_subcommand("tset", "term tuple sets");
    tset->add_option("action", tset_args.action, "enum, member or that")
        ->required()
        ->check(CLI::IsMember({"enum", "member", "that"}));
    tset->add_option("--count", tset_args.count, "term tuples to list (enum)");
    tset->add_option("--terms", tset_args.terms, "term tuple in x1..xn (member)");
    tset->add_option("--tuple,--target", tset_args.target,
                     "tuple b; without it, b is the generators");

    OrbitArgs orbit_args;
    auto*     orbit = app.add_subcommand("orbit", "membership in the automorphism orbit");
    orbit->add_option("action", orbit_args.action, "decide, semi-yes, semi-no or dovetail")
        ->required()
        ->check(CLI::IsMember({"decide", "semi-yes", "semi-no", "dovetail"}));
    orbit->add_option("--tuple", orbit_args.tuple, "comma separated words");
    orbit->add_option("--matrix", orbit_args.matrix, "exponent rows, e.g. '2 0; 0 1'");
    orbit->add_option("--batch", orbit_args.batch, "file with one tuple per line");
    orbit->add_option("--jobs", orbit_args.jobs, "worker threads for --batch");
    orbit->add_option("--rounds", orbit_args.rounds, "dovetail rounds (budget 2^round)");

    ScottArgs scott_args;
    auto*     scott = app.add_subcommand("scott", "Theta, the Scott sentence and evaluation");
    scott->add_option("action", scott_args.action, "theta, sentence or eval")
        ->required()
        ->check(CLI::IsMember({"theta", "sentence", "eval"}));
    scott->add_option("--format", scott_args.format, "sexp or json")
        ->check(CLI::IsMember({"sexp", "json"}));
    scott->add_option("--tuple", scott_args.tuple, "assignment for Theta (eval)");
    scott->add_flag("--sentence", scott_args.sentence, "evaluate the sentence instead (eval)");

    EtypesArgs etypes_args;
    auto*      etypes = app.add_subcommand("etypes", "positive existential types");
    etypes->add_option("action", etypes_args.action, "probe or check")
        ->required()
        ->check(CLI::IsMember({"probe", "check"}));
    etypes->add_option("--images", etypes_args.images, "generator images (probe one endomorphism)");
    etypes->add_option("--samples", etypes_args.samples, "random endomorphisms (check)");
    etypes->add_option("--length", etypes_args.length, "image length cap for samples");

    OracleArgs oracle_args;
    auto* oracle = app.add_subcommand("oracle-check", "run the acceptance suite");
    oracle->add_option("--only", oracle_args.only, "comma separated criterion numbers");
    oracle->add_option("--golden", oracle_args.golden, "golden file directory");
    oracle->add_flag("--verbose", oracle_args.verbose, "progress on stderr");

    for (auto* sub : app.get_subcommands({})) {
      sub->fallthrough();
    }

    Io io{out, err};
    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
      s.backend.kind = kind;
      if (parse->parsed()) return parse_command(s, io);
      if (wp->parsed()) return wp_command(words, s, io);
      if (nf->parsed()) return nf_command(nf_words, s, io);
      if (elements->parsed()) return elements_command(count, s, io);
      if (endo->parsed()) return endo_command(endo_args, s, io);
      if (tset->parsed()) return tset_command(tset_args, s, io);
      if (orbit->parsed()) return orbit_command(orbit_args, s, io);
      if (scott->parsed()) return scott_command(scott_args, s, io);
      if (etypes->parsed()) return etypes_command(etypes_args, s, io);
      return oracle_command(oracle_args, io);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return kUsage;
    } catch (NoOrbitDecider const& e) {
      err << "error: " << e.what() << '\n';
      return kUnknown;
    } catch (NotCertified const& e) {
      err << "error: " << e.what() << '\n';
      return kUnknown;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return kBadInput;
    } catch (std::invalid_argument const& e) {
      err << "error: " << e.what() << '\n';
      return kBadInput;
    }
  }

}  // namespace wwp::cli
