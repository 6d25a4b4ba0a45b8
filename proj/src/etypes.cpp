#include "wwp/etypes.hpp"

#include <random>
#include <stdexcept>

#include "wwp/error.hpp"

namespace wwp {

  namespace {

    // Enough to enumerate A^n outright.
    constexpr std::uint64_t kExhaustiveLimit = 1'000'000;

    std::optional<std::uint64_t> tuple_count(Backend const& b, std::size_t n) {
      auto order = b.order();
      if (!order) {
        return std::nullopt;
      }
      std::uint64_t count = 1;
      for (std::size_t i = 0; i < n; ++i) {
        if (count > kExhaustiveLimit / std::max<std::uint64_t>(*order, 1)) {
          return std::nullopt;
        }
        count *= *order;
      }
      return count;
    }

    bool has_decider(Backend const& b) {
      return b.capabilities().has_orbit_decider() && b.capabilities().hopfian_certified;
    }

    void require_decider(Backend const& b) {
      if (!has_decider(b)) {
        throw NoOrbitDecider("needs a Hopfian backend with an orbit decider: " + b.describe());
      }
    }

    std::variant<ConsistentWithAut, RefutedByTheta> check_with(Endomorphism const& e,
                                                               FormulaDoc const&   theta,
                                                               Budget const&       budget,
                                                               ThetaIndex*         index) {
      auto const& b = e.backend_ptr();
      auto        r = evaluate_bounded(theta, e.images(), b, budget, index);
      if (r.outcome != Outcome::Falsified) {
        return ConsistentWithAut{budget};
      }
      if (!r.violation) {
        throw std::logic_error("relators fail at the image of an endomorphism");
      }
      auto const& t = r.violation->terms;
      return RefutedByTheta{*r.violation,
                            ExistsPlusViolation{t, r.violation->witness,
                                                exists_plus_formula(t, b->presentation()),
                                                "orbit-decider"}};
    }

  }  // namespace

  std::optional<std::string> refute_at_generators(TermTuple const& t, Backend const& b) {
    auto const& p = b.presentation();
    auto const  n = b.rank();
    if (t.size() != n || t.arity_in != n) {
      throw ArityMismatch("term tuple shape differs from the rank");
    }
    if (tuple_count(b, n)) {
      auto const    a = b.normal_forms(p.generator_tuple());
      WitnessCursor all(b, n);
      while (auto c = all.next()) {
        if (satisfies_relators(p, b, *c) && b.normal_forms(evaluate_terms(t, *c)) == a) {
          return std::nullopt;
        }
      }
      return std::string("exhaustive");
    }
    if (has_decider(b) && !member_T_decide(t, b)) {
      return std::string("orbit-decider");
    }
    return std::nullopt;
  }

  FormulaDoc exists_plus_formula(TermTuple const& t, Presentation const& p) {
    auto const n = p.rank();
    WordTuple  x, y;
    std::vector<VarId> ys;
    for (std::size_t i = 0; i < n; ++i) {
      x.push_back(Word::generator(static_cast<std::uint32_t>(i)));
      y.push_back(Word::generator(static_cast<std::uint32_t>(n + i)));
      ys.push_back(static_cast<VarId>(n + i));
    }
    std::vector<FormulaPtr> block;
    for (auto const& r : p.relators()) {
      block.push_back(make_eq(substitute(r, y), Word()));
    }
    for (std::size_t i = 0; i < n; ++i) {
      block.push_back(make_eq(x[i], substitute(t.components[i], y)));
    }
    auto names = variable_names(n, "x");
    for (auto const& v : variable_names(n, "y")) {
      names.push_back(v);
    }
    std::vector<VarId> free;
    for (std::size_t i = 0; i < n; ++i) {
      free.push_back(static_cast<VarId>(i));
    }
    return FormulaDoc{"exists-plus", std::move(names), std::move(free),
                      make_exists(std::move(ys), make_and(std::move(block)))};
  }

  std::variant<NoViolation, ExistsPlusViolation> exists_plus_probe(Endomorphism const& e,
                                                                   Budget const&       budget) {
    if (!e.validated()) {
      throw NotAHomomorphism("endomorphism was never validated");
    }
    auto const& b = e.backend();
    auto const  n = b.rank();
    TermCursor  terms(n, n);
    for (std::uint64_t i = 0; i < budget.term_cap; ++i) {
      auto t = terms.next();
      if (!t) {
        return NoViolation{i};
      }
      auto c = member_T_semi(*t, e.images(), b, budget);
      if (!c) {
        continue;
      }
      if (auto how = refute_at_generators(*t, b)) {
        return ExistsPlusViolation{*t, *c, exists_plus_formula(*t, b.presentation()), *how};
      }
    }
    return NoViolation{budget.term_cap};
  }

  bool recheck_violation(Endomorphism const& e, ExistsPlusViolation const& v) {
    auto const& b = e.backend();
    if (!satisfies_relators(b.presentation(), b, v.witness)
        || b.normal_forms(evaluate_terms(v.terms, v.witness)) != e.images()) {
      return false;
    }
    return refute_at_generators(v.terms, b).has_value();
  }

  std::variant<ConsistentWithAut, RefutedByTheta> theta_check_embedding(Endomorphism const& e,
                                                                        Budget const& budget,
                                                                        ThetaIndex*   index) {
    if (!e.validated()) {
      throw NotAHomomorphism("endomorphism was never validated");
    }
    require_decider(e.backend());
    auto theta = build_theta_prefix(e.backend_ptr(), budget, index);
    return check_with(e, theta, budget, index);
  }

  char const* to_string(Dichotomy d) {
    switch (d) {
      case Dichotomy::Refuted: return "Refuted";
      case Dichotomy::Automorphism: return "Automorphism";
      default: return "FAILURE";
    }
  }

  DichotomyReport strongly_defined_probe(std::vector<Endomorphism> const& endos,
                                         Budget const& budget, ThetaIndex* index) {
    DichotomyReport report;
    if (endos.empty()) {
      return report;
    }
    auto const& b = endos.front().backend_ptr();
    require_decider(*b);
    std::optional<ThetaIndex> local;
    if (index == nullptr) {
      local.emplace(b);
      index = &*local;
    }
    auto const theta = build_theta_prefix(b, budget, index);
    for (auto const& e : endos) {
      if (e.backend_ptr() != b) {
        throw Error("endomorphisms of different backends");
      }
      ++report.checked;
      DichotomyCase c{e.images(), Dichotomy::Failure, ""};
      auto          verdict = orbit_decide(*b, e.images()).decision;
      auto          r       = check_with(e, theta, budget, index);
      if (auto const* refuted = std::get_if<RefutedByTheta>(&r)) {
        if (verdict == Decision::InOrbit) {
          c.detail = "Theta refutes an automorphism";
        } else if (!recheck_violation(e, refuted->converted)) {
          c.detail = "converted violation does not re-check";
        } else {
          c.outcome = Dichotomy::Refuted;
          c.detail  = "conjunct " + format_term_tuple(refuted->violation.terms);
          ++report.refuted;
        }
      } else if (verdict == Decision::InOrbit) {
        c.outcome = Dichotomy::Automorphism;
        ++report.automorphisms;
      } else {
        c.detail = std::string("Theta holds so far but the decider says ") + to_string(verdict);
      }
      if (c.outcome == Dichotomy::Failure) {
        report.failures.push_back(c);
      }
      report.cases.push_back(std::move(c));
    }
    return report;
  }

  std::vector<Endomorphism> all_endomorphisms(BackendPtr const& b) {
    auto const n = b->rank();
    if (!tuple_count(*b, n)) {
      throw Error("all_endomorphisms needs a small finite group: " + b->describe());
    }
    std::vector<Endomorphism> out;
    WitnessCursor             all(*b, n);
    while (auto c = all.next()) {
      if (satisfies_relators(b->presentation(), *b, *c)) {
        out.emplace_back(b, std::move(*c));
      }
    }
    return out;
  }

  std::vector<Endomorphism> sample_endomorphisms(BackendPtr const& b, std::size_t count,
                                                 std::size_t length_cap, std::uint64_t seed) {
    auto const    n = b->rank();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> length(0, length_cap);
    auto          random_word = [&] {
      auto const         len = length(rng);
      std::vector<Letter> letters;
      for (std::size_t i = 0; i < len; ++i) {
        auto const choices = i == 0 ? 2 * n : 2 * n - 1;
        auto       code    = static_cast<std::uint32_t>(
            std::uniform_int_distribution<std::size_t>(0, choices - 1)(rng));
        if (i > 0 && code >= letters.back().inv().code()) {
          ++code;
        }
        letters.push_back(Letter::from_code(code));
      }
      return Word(std::move(letters));
    };
    std::vector<Endomorphism> out;
    std::size_t               misses = 0;
    while (out.size() < count) {
      WordTuple images;
      for (std::size_t i = 0; i < n; ++i) {
        images.push_back(random_word());
      }
      if (!satisfies_relators(b->presentation(), *b, images)) {
        if (++misses > 1000 * (count + 1)) {
          throw Error("too few random tuples satisfy the relators");
        }
        continue;
      }
      out.emplace_back(b, std::move(images));
    }
    return out;
  }

  Budget dichotomy_budget(Backend const& b, std::size_t length_cap) {
    auto const    n = b.rank();
    TermCursor    terms(n, n);
    std::uint64_t term_cap = 0;
    while (auto t = terms.next()) {
      if (total_length(t->components) > n * length_cap) {
        break;
      }
      ++term_cap;
    }
    Budget out;
    out.term_cap    = term_cap;
    out.witness_cap = tuple_count(b, n).value_or(1);
    out.step_cap    = term_cap * out.witness_cap;
    out.length_cap  = std::max<std::uint64_t>(n * length_cap, 1) << 8;
    return out;
  }

}  // namespace wwp
