#include "wwp/tsets.hpp"

#include <algorithm>
#include <limits>

#include "wwp/error.hpp"

namespace wwp {

  std::optional<WordTuple> member_T_semi(TermTuple const& t, WordTuple const& target,
                                         Backend const& b, Budget const& budget) {
    if (t.size() != target.size()) {
      throw ArityMismatch("term tuple and target differ in length");
    }
    if (t.arity_in != b.rank()) {
      throw ArityMismatch("terms must be in as many variables as there are generators");
    }
    auto const&   p      = b.presentation();
    auto const    want   = b.normal_forms(target);
    WitnessCursor cursor(b, b.rank(), p.generator_tuple());
    for (std::uint64_t i = 0; i < budget.witness_cap; ++i) {
      auto c = cursor.next();
      if (!c) {
        break;
      }
      if (satisfies_relators(p, b, *c) && b.normal_forms(evaluate_terms(t, *c)) == want) {
        return c;
      }
    }
    return std::nullopt;
  }

  bool member_T_decide(TermTuple const& t, Backend const& b) {
    auto const& caps = b.capabilities();
    if (!caps.has_orbit_decider() || !caps.hopfian_certified) {
      throw NoOrbitDecider("membership in T(a) needs a Hopfian backend with an orbit decider");
    }
    if (t.size() != b.rank() || t.arity_in != b.rank()) {
      throw ArityMismatch("term tuple shape does not match the generating tuple");
    }
    auto image = evaluate_terms(t, b.presentation().generator_tuple());
    auto v     = orbit_decide(b, image);
    if (v.decision == Decision::Unknown) {
      throw Error("orbit decider returned Unknown: " + v.note);
    }
    return v.decision == Decision::InOrbit;
  }

  ////////////////////////////////////////////////////////////////////////
  // Ranking term tuples
  ////////////////////////////////////////////////////////////////////////

  namespace {
    BigInt reduced_count(std::size_t length, std::size_t k) {
      if (length == 0) {
        return 1;
      }
      if (k == 0) {
        return 0;
      }
      BigInt out = 2 * k;
      for (std::size_t i = 1; i < length; ++i) {
        out *= 2 * k - 1;
      }
      return out;
    }

    BigInt word_rank(Word const& w, std::size_t k) {
      BigInt rank = 0;
      for (std::size_t p = 0; p < w.size(); ++p) {
        std::uint32_t below = w[p].code();
        if (p > 0 && w[p - 1].inv().code() < w[p].code()) {
          --below;
        }
        rank = rank * (p == 0 ? 2 * k : 2 * k - 1) + below;
      }
      return rank;
    }

    bool next_composition(std::vector<std::size_t>& x) {
      std::size_t const n    = x.size();
      std::size_t       tail = x[n - 1];
      for (std::size_t i = n - 1; i-- > 0;) {
        if (tail > 0) {
          ++x[i];
          for (std::size_t j = i + 1; j + 1 < n; ++j) {
            x[j] = 0;
          }
          x[n - 1] = tail - 1;
          return true;
        }
        tail += x[i];
      }
      return false;
    }
  }  // namespace

  std::uint64_t unreduced_length(TermTuple const& t, WordTuple const& args) {
    std::uint64_t n = 0;
    for (auto const& w : t.components) {
      for (Letter l : w.letters()) {
        n += args.at(l.gen).size();
      }
    }
    return n;
  }

  std::optional<std::uint64_t> term_index(TermTuple const& t) {
    std::size_t const n = t.size();
    std::size_t const k = t.arity_in;
    if (n == 0) {
      return 0;
    }
    std::vector<std::size_t> lengths;
    std::size_t              total = 0;
    for (auto const& w : t.components) {
      if (!w.fits(k)) {
        return std::nullopt;
      }
      lengths.push_back(w.size());
      total += w.size();
    }
    // ways[s] = number of tuples of the first j components with total s.
    std::vector<BigInt> ways(total + 1, 0);
    ways[0] = 1;
    if (n == 1) {
      // Words shorter than w: 1 + 2k((2k-1)^(L-1) - 1)/(2k-2), or 2L-1 when k = 1.
      BigInt shorter = 0;
      if (total > 0) {
        shorter = k == 1 ? BigInt(2 * total - 1)
                         : 1 + (reduced_count(total, k) - 2 * k) / (2 * k - 2);
      }
      auto rank = shorter + word_rank(t.components[0], k);
      if (rank > std::numeric_limits<std::uint64_t>::max()) {
        return std::nullopt;
      }
      return static_cast<std::uint64_t>(rank);
    }
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<BigInt> next(total + 1, 0);
      for (std::size_t s = 0; s <= total; ++s) {
        for (std::size_t l = 0; s + l <= total; ++l) {
          next[s + l] += ways[s] * reduced_count(l, k);
        }
      }
      ways = std::move(next);
    }
    BigInt index = 0;
    for (std::size_t s = 0; s < total; ++s) {
      index += ways[s];
    }
    std::vector<std::size_t> comp(n, 0);
    comp[n - 1] = total;
    while (comp != lengths) {
      BigInt block = 1;
      for (auto l : comp) {
        block *= reduced_count(l, k);
      }
      index += block;
      if (!next_composition(comp)) {
        return std::nullopt;
      }
    }
    BigInt place = 1;
    for (std::size_t i = n; i-- > 0;) {
      index += word_rank(t.components[i], k) * place;
      place *= reduced_count(lengths[i], k);
    }
    if (index > std::numeric_limits<std::uint64_t>::max()) {
      return std::nullopt;
    }
    return static_cast<std::uint64_t>(index);
  }

  ////////////////////////////////////////////////////////////////////////
  // ThetaIndex
  ////////////////////////////////////////////////////////////////////////

  ThetaIndex::ThetaIndex(BackendPtr b)
      : _backend(std::move(b)),
        _terms(_backend->rank(), _backend->rank()),
        _witness_cursor(*_backend, _backend->rank(), _backend->presentation().generator_tuple()) {
    auto const& caps = _backend->capabilities();
    if (!caps.has_orbit_decider() || !caps.hopfian_certified) {
      throw NoOrbitDecider("T-hat needs a Hopfian backend with an orbit decider");
    }
  }

  void ThetaIndex::scan_to(std::uint64_t term_cap) {
    while (_scanned < term_cap) {
      auto t = _terms.next();
      if (!t) {
        _scanned = term_cap;
        break;
      }
      if (!member_T_decide(*t, *_backend)) {
        _members.push_back(std::move(*t));
        _member_index.push_back(_scanned);
      }
      ++_scanned;
    }
  }

  std::size_t ThetaIndex::conjunct_count(std::uint64_t term_cap) {
    scan_to(term_cap);
    return static_cast<std::size_t>(
        std::lower_bound(_member_index.begin(), _member_index.end(), term_cap)
        - _member_index.begin());
  }

  bool ThetaIndex::witness(std::uint64_t position) {
    while (_witnesses.size() <= position && !_witnesses_done) {
      auto c = _witness_cursor.next();
      if (!c) {
        _witnesses_done = true;
        break;
      }
      if (satisfies_relators(_backend->presentation(), *_backend, *c)) {
        _witnesses.emplace_back(std::move(*c));
      } else {
        _witnesses.emplace_back(std::nullopt);
      }
    }
    return position < _witnesses.size();
  }

  std::optional<ThetaViolation> ThetaIndex::find_violation(WordTuple const& target,
                                                           std::size_t      n_conjuncts,
                                                           Budget const&    budget) {
    if (n_conjuncts > _members.size()) {
      throw std::out_of_range("more conjuncts requested than scanned");
    }
    auto const    want  = _backend->normal_forms(target);
    auto const    key   = WordTupleHash{}(want);
    std::uint64_t steps = 0;
    for (std::uint64_t pos = 0; pos < budget.witness_cap && steps < budget.step_cap; ++pos) {
      if (!witness(pos)) {
        break;
      }
      auto const& c = _witnesses[pos];
      if (!c) {
        continue;
      }
      auto allowed = static_cast<std::size_t>(
          std::min<std::uint64_t>(n_conjuncts, budget.step_cap - steps));
      steps += allowed;
      if (_tables.size() <= pos) {
        _tables.resize(pos + 1);
      }
      auto& table = _tables[pos];
      if (table.length_cap < budget.length_cap) {
        table = Table{0, budget.length_cap, {}};
      }
      if (table.covered < n_conjuncts) {
        for (; table.covered < n_conjuncts; ++table.covered) {
          auto const& t    = _members[table.covered];
          auto        cost = unreduced_length(t, *c);
          if (cost > table.length_cap) {
            continue;
          }
          auto value = _backend->normal_forms(evaluate_terms(t, *c));
          table.by_hash.push_back(Entry{WordTupleHash{}(value),
                                        static_cast<std::uint32_t>(table.covered),
                                        static_cast<std::uint32_t>(std::min<std::uint64_t>(cost, UINT32_MAX))});
        }
        std::sort(table.by_hash.begin(), table.by_hash.end());
      }
      std::optional<std::size_t> best;
      auto lo = std::lower_bound(table.by_hash.begin(), table.by_hash.end(), Entry{key, 0, 0});
      for (auto it = lo; it != table.by_hash.end() && it->hash == key; ++it) {
        auto const& e = *it;
        if (e.conjunct < allowed && e.cost <= budget.length_cap
            && _backend->normal_forms(evaluate_terms(_members[e.conjunct], *c)) == want) {
          best = e.conjunct;
          break;
        }
      }
      if (best) {
        return ThetaViolation{*best, _members[*best], *c, pos};
      }
    }
    return std::nullopt;
  }

  std::vector<TermTuple> enumerate_That(BackendPtr const& b, Budget const& budget,
                                        ThetaIndex* index) {
    std::optional<ThetaIndex> local;
    if (index == nullptr) {
      local.emplace(b);
      index = &*local;
    }
    auto                   n = index->conjunct_count(budget.term_cap);
    std::vector<TermTuple> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(index->conjunct(i));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Inclusion probe
  ////////////////////////////////////////////////////////////////////////

  InclusionReport inclusion_probe(WordTuple const& b_tuple, WordTuple const& c_tuple,
                                  BackendPtr const& b, Budget const& budget) {
    if (b_tuple.size() != c_tuple.size()) {
      throw ArityMismatch("tuples differ in length");
    }
    auto const&     p = b->presentation();
    auto const      c_nf = b->normal_forms(c_tuple);
    InclusionReport report;

    WitnessCursor endo_search(*b, b->rank(), p.generator_tuple());
    bool          endo_done = false;

    // Separating terms only exist to be found on finite groups, where all
    // relator-satisfying tuples can be listed.
    bool                   finite = b->order().has_value();
    std::vector<WordTuple> models;
    if (finite) {
      WitnessCursor all(*b, b->rank());
      while (auto d = all.next()) {
        if (satisfies_relators(p, *b, *d)) {
          models.push_back(std::move(*d));
        }
      }
    }
    TermCursor terms(b_tuple.size(), b->rank());
    auto const b_nf = b->normal_forms(b_tuple);

    std::uint64_t const rounds = std::max(budget.witness_cap, finite ? budget.term_cap : 0);
    for (std::uint64_t r = 0; r < rounds; ++r) {
      report.rounds = r + 1;
      if (r < budget.witness_cap && !endo_done) {
        if (auto d = endo_search.next()) {
          if (satisfies_relators(p, *b, *d)) {
            WordTuple image;
            for (auto const& w : b_tuple) {
              image.push_back(b->normal_form(substitute(w, *d)));
            }
            if (image == c_nf) {
              report.endo_found.emplace(b, *d);
            }
          }
        } else {
          endo_done = true;
        }
      }
      if (finite && r < budget.term_cap) {
        auto t = terms.next();
        std::optional<WordTuple> witness_b;
        bool                     hits_c = false;
        for (auto const& d : models) {
          auto v = b->normal_forms(evaluate_terms(*t, d));
          if (!witness_b && v == b_nf) {
            witness_b = d;
          }
          hits_c = hits_c || v == c_nf;
        }
        if (witness_b && !hits_c) {
          report.counterexample.emplace(std::move(*t), std::move(*witness_b));
        }
      }
      if (report.endo_found || report.counterexample) {
        break;
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Dovetailing
  ////////////////////////////////////////////////////////////////////////

  std::variant<Landed, BudgetExhausted> dovetail_decide(Stepper const& semi_yes,
                                                        Stepper const& semi_no,
                                                        std::uint64_t  max_rounds) {
    for (std::uint64_t r = 0; r < max_rounds; ++r) {
      bool yes = semi_yes(r);
      bool no  = semi_no(r);
      if (yes && no) {
        throw ContradictoryCertificates("both semi-procedures landed in round "
                                        + std::to_string(r));
      }
      if (yes || no) {
        return Landed{yes, r};
      }
    }
    return BudgetExhausted{max_rounds};
  }

}  // namespace wwp
