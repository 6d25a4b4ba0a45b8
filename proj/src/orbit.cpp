#include "wwp/orbit.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "wwp/error.hpp"
#include "wwp/tsets.hpp"

namespace wwp {

  char const* to_string(Decision d) {
    switch (d) {
      case Decision::InOrbit:
        return "InOrbit";
      case Decision::NotInOrbit:
        return "NotInOrbit";
      case Decision::Unknown:
        return "Unknown";
    }
    return "?";
  }

  ////////////////////////////////////////////////////////////////////////
  // Nielsen reduction
  ////////////////////////////////////////////////////////////////////////

  std::string format_move(NielsenMove const& m) {
    auto i = std::to_string(m.i + 1), j = std::to_string(m.j + 1);
    switch (m.kind) {
      case NielsenMove::Kind::Invert:
        return "w" + i + " <- w" + i + "^-1";
      case NielsenMove::Kind::Swap:
        return "w" + i + " <-> w" + j;
      case NielsenMove::Kind::Product:
        break;
    }
    auto f = "w" + j + (m.sign < 0 ? "^-1" : "");
    return "w" + i + " <- " + (m.left ? f + "*w" + i : "w" + i + "*" + f);
  }

  namespace {

    Word product_image(WordTuple const& w, NielsenMove const& m) {
      auto f = m.sign < 0 ? w[m.j].inverse() : w[m.j];
      return m.left ? f * w[m.i] : w[m.i] * f;
    }

    void apply_move(WordTuple& w, NielsenMove const& m) {
      switch (m.kind) {
        case NielsenMove::Kind::Product:
          w[m.i] = product_image(w, m);
          break;
        case NielsenMove::Kind::Invert:
          w[m.i] = w[m.i].inverse();
          break;
        case NielsenMove::Kind::Swap:
          std::swap(w[m.i], w[m.j]);
          break;
      }
    }

    // All product moves in tie-break order.
    std::vector<NielsenMove> product_moves(std::size_t n) {
      std::vector<NielsenMove> out;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i == j) {
            continue;
          }
          for (bool left : {false, true}) {
            for (int sign : {1, -1}) {
              out.push_back(NielsenMove{NielsenMove::Kind::Product, i, j, left, sign});
            }
          }
        }
      }
      return out;
    }

    bool is_signed_letters(WordTuple const& w) {
      std::vector<bool> used(w.size(), false);
      for (auto const& x : w) {
        if (x.size() != 1 || x[0].gen >= w.size() || used[x[0].gen]) {
          return false;
        }
        used[x[0].gen] = true;
      }
      return true;
    }

    std::optional<NielsenMove> reducing_move(WordTuple const&               w,
                                             std::vector<NielsenMove> const& moves) {
      for (auto const& m : moves) {
        if (product_image(w, m).size() < w[m.i].size()) {
          return m;
        }
      }
      return std::nullopt;
    }

    // Breadth-first search through the tuples of equal total length for one
    // admitting a reduction (or made of letters). Returns the path.
    std::optional<std::vector<NielsenMove>> level_search(WordTuple const&               start,
                                                         std::vector<NielsenMove> const& moves,
                                                         std::size_t cap, bool& capped) {
      struct Node {
        WordTuple   state;
        std::size_t parent;
        NielsenMove move;
      };
      std::vector<Node>                                      nodes{{start, 0, {}}};
      std::unordered_map<WordTuple, std::size_t, WordTupleHash> seen{{start, 0}};
      auto path_to = [&](std::size_t k) {
        std::vector<NielsenMove> out;
        while (k != 0) {
          out.push_back(nodes[k].move);
          k = nodes[k].parent;
        }
        std::reverse(out.begin(), out.end());
        return out;
      };
      for (std::size_t head = 0; head < nodes.size(); ++head) {
        for (auto const& m : moves) {
          auto const& s   = nodes[head].state;
          auto        img = product_image(s, m);
          if (img.size() < s[m.i].size()) {
            auto p = path_to(head);
            p.push_back(m);
            return p;
          }
          if (img.size() > s[m.i].size()) {
            continue;
          }
          auto next = s;
          next[m.i] = std::move(img);
          if (seen.count(next) != 0) {
            continue;
          }
          if (nodes.size() >= cap) {
            capped = true;
            return std::nullopt;
          }
          seen.emplace(next, nodes.size());
          nodes.push_back(Node{std::move(next), head, m});
          if (is_signed_letters(nodes.back().state)) {
            return path_to(nodes.size() - 1);
          }
        }
      }
      return std::nullopt;
    }

  }  // namespace

  NielsenResult nielsen_reduce(WordTuple const& tuple, std::size_t level_cap) {
    NielsenResult r{tuple, {}, true};
    auto const    moves = product_moves(tuple.size());
    while (!is_signed_letters(r.reduced)) {
      if (auto m = reducing_move(r.reduced, moves)) {
        apply_move(r.reduced, *m);
        r.log.push_back(*m);
        continue;
      }
      bool capped = false;
      auto path   = level_search(r.reduced, moves, level_cap, capped);
      if (!path) {
        r.complete = !capped;
        break;
      }
      for (auto const& m : *path) {
        apply_move(r.reduced, m);
        r.log.push_back(m);
      }
    }
    if (is_signed_letters(r.reduced)) {
      for (std::size_t i = 0; i < r.reduced.size(); ++i) {
        if (r.reduced[i][0].inverse) {
          NielsenMove m{NielsenMove::Kind::Invert, i, i, false, 1};
          apply_move(r.reduced, m);
          r.log.push_back(m);
        }
      }
      for (std::size_t i = 0; i < r.reduced.size(); ++i) {
        std::size_t j = i;
        while (r.reduced[j][0].gen != i) {
          ++j;
        }
        if (j != i) {
          NielsenMove m{NielsenMove::Kind::Swap, i, j, false, 1};
          apply_move(r.reduced, m);
          r.log.push_back(m);
        }
      }
    }
    return r;
  }

  WordTuple replay(std::vector<NielsenMove> const& log, WordTuple tuple) {
    for (auto const& m : log) {
      if (m.i >= tuple.size() || m.j >= tuple.size()) {
        throw ArityMismatch("move index outside the tuple");
      }
      apply_move(tuple, m);
    }
    return tuple;
  }

  ////////////////////////////////////////////////////////////////////////
  // Exact deciders
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void check_shape(std::size_t rank, WordTuple const& tuple) {
      if (tuple.size() != rank) {
        throw ArityMismatch("tuple has " + std::to_string(tuple.size()) + " entries, expected "
                            + std::to_string(rank));
      }
      for (auto const& w : tuple) {
        if (!w.fits(rank)) {
          throw Error("word uses a generator outside the presentation");
        }
      }
    }
  }  // namespace

  std::optional<std::size_t> failing_relator(Backend const& b, WordTuple const& tuple) {
    auto const& rels = b.presentation().relators();
    for (std::size_t i = 0; i < rels.size(); ++i) {
      if (!b.is_identity(substitute(rels[i], tuple))) {
        return i;
      }
    }
    return std::nullopt;
  }

  OrbitVerdict is_basis_free(WordTuple const& tuple, std::size_t rank) {
    check_shape(rank, tuple);
    OrbitVerdict v;
    v.method      = "nielsen";
    v.determinant = bareiss_det(exponent_matrix(tuple, rank));
    auto r        = nielsen_reduce(tuple);
    v.nielsen_log = r.log;
    v.reduced     = r.reduced;
    if (is_signed_letters(r.reduced)) {
      v.decision       = Decision::InOrbit;
      v.inverse_images = replay(r.log, FreeGroupBackend(rank).presentation().generator_tuple());
    } else if (r.complete) {
      v.decision = Decision::NotInOrbit;
    } else {
      v.note = "level search cap reached";
    }
    return v;
  }

  OrbitVerdict abelian_orbit_decide(FreeAbelianBackend const& b, WordTuple const& tuple) {
    check_shape(b.rank(), tuple);
    OrbitVerdict v;
    v.method = "determinant";
    if (b.rank() == 0) {
      v.decision       = Decision::InOrbit;
      v.inverse_images = WordTuple{};
      return v;
    }
    auto h        = hnf_and_det(exponent_matrix(tuple, b.rank()));
    v.determinant = h.det;
    if (abs(h.det) != 1) {
      v.decision = Decision::NotInOrbit;
      return v;
    }
    v.decision = Decision::InOrbit;
    WordTuple inv;
    for (std::size_t i = 0; i < b.rank(); ++i) {
      std::vector<BigInt> row(b.rank());
      for (std::size_t j = 0; j < b.rank(); ++j) {
        row[j] = h.transform(i, j);
      }
      inv.push_back(b.from_exponents(row));
    }
    v.inverse_images = std::move(inv);
    return v;
  }

  OrbitVerdict dihedral_orbit_decide(WordTuple const& pair) {
    check_shape(2, pair);
    OrbitVerdict v;
    v.method = "dihedral";
    auto r   = DihedralBackend::element(pair[0]);
    auto s   = DihedralBackend::element(pair[1]);
    if (r.reflect || (r.k != 1 && r.k != -1)) {
      v.decision = Decision::NotInOrbit;
      v.note     = "first entry is not r or r^-1";
    } else if (!s.reflect) {
      v.decision = Decision::NotInOrbit;
      v.note     = "second entry is not a reflection";
    } else {
      v.decision = Decision::InOrbit;
      v.inverse_images =
          WordTuple{DihedralBackend::word({r.k, false}), DihedralBackend::word({-r.k * s.k, true})};
    }
    return v;
  }

  OrbitVerdict finite_orbit_decide(CosetTableBackend const& b, WordTuple const& tuple) {
    check_shape(b.rank(), tuple);
    OrbitVerdict v;
    v.method = "finite";
    if (auto i = failing_relator(b, tuple)) {
      v.decision       = Decision::NotInOrbit;
      v.failed_relator = i;
      return v;
    }
    std::vector<std::uint32_t> idx;
    for (auto const& w : tuple) {
      idx.push_back(b.index_of(w));
    }
    auto const& auts         = b.automorphisms();
    v.automorphisms_checked  = auts.size();
    if (!std::binary_search(auts.begin(), auts.end(), idx)) {
      v.decision = Decision::NotInOrbit;
      return v;
    }
    v.decision = Decision::InOrbit;
    // Invert sigma: a-bar -> tuple by scanning the elements.
    auto const gens = b.presentation().generator_tuple();
    WordTuple  inv(gens.size());
    for (std::uint32_t e = 0; e < *b.order(); ++e) {
      auto image = b.index_of(substitute(b.element(e), tuple));
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (image == b.index_of(gens[i])) {
          inv[i] = b.element(e);
        }
      }
    }
    v.inverse_images = std::move(inv);
    return v;
  }

  OrbitVerdict orbit_decide(Backend const& b, WordTuple const& tuple) {
    check_shape(b.rank(), tuple);
    switch (b.kind()) {
      case BackendKind::FreeGroup:
        return is_basis_free(tuple, b.rank());
      case BackendKind::FreeAbelian:
        return abelian_orbit_decide(dynamic_cast<FreeAbelianBackend const&>(b), tuple);
      case BackendKind::InfiniteDihedral:
        return dihedral_orbit_decide(tuple);
      case BackendKind::FiniteCosetTable:
        return finite_orbit_decide(dynamic_cast<CosetTableBackend const&>(b), tuple);
      case BackendKind::RewritingSystem:
        break;
    }
    OrbitVerdict v;
    auto const&  plugin = b.capabilities().orbit_plugin;
    if (!plugin) {
      v.method = "none";
      v.note   = "no orbit decider registered";
      return v;
    }
    v.method = "plugin:" + plugin->name();
    if (auto i = failing_relator(b, tuple)) {
      v.decision       = Decision::NotInOrbit;
      v.failed_relator = i;
      return v;
    }
    v.decision = plugin->in_orbit(b, tuple) ? Decision::InOrbit : Decision::NotInOrbit;
    if (v.decision == Decision::InOrbit) {
      if (auto y = orbit_semi_yes(b, tuple, Budget{})) {
        v.inverse_images = y->terms.components;
      }
    }
    return v;
  }

  ////////////////////////////////////////////////////////////////////////
  // Certificates
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // alpha: a-bar -> tuple and beta: a-bar -> inv are mutually inverse.
    bool inverse_pair(Backend const& b, WordTuple const& tuple, WordTuple const& inv) {
      auto const& p    = b.presentation();
      auto const  gens = p.generator_tuple();
      if (inv.size() != gens.size() || !satisfies_relators(p, b, tuple)
          || !satisfies_relators(p, b, inv)) {
        return false;
      }
      for (std::size_t i = 0; i < gens.size(); ++i) {
        // beta(alpha(a_i)) = tuple_i(inv), alpha(beta(a_i)) = inv_i(tuple).
        if (!b.equal(substitute(tuple[i], inv), gens[i])
            || !b.equal(substitute(inv[i], tuple), gens[i])) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  bool recheck(Backend const& b, WordTuple const& tuple, OrbitVerdict const& v) {
    switch (v.decision) {
      case Decision::Unknown:
        return true;
      case Decision::InOrbit:
        return v.inverse_images && inverse_pair(b, tuple, *v.inverse_images);
      case Decision::NotInOrbit:
        break;
    }
    if (v.failed_relator) {
      auto const& rels = b.presentation().relators();
      return *v.failed_relator < rels.size()
             && !b.is_identity(substitute(rels[*v.failed_relator], tuple));
    }
    if (v.violation) {
      auto const& x = *v.violation;
      return satisfies_relators(b.presentation(), b, x.witness)
             && b.normal_forms(evaluate_terms(x.terms, x.witness)) == b.normal_forms(tuple)
             && !member_T_decide(x.terms, b);
    }
    if (v.method == "nielsen") {
      if (!v.reduced || replay(v.nielsen_log, tuple) != *v.reduced) {
        return false;
      }
      if (v.determinant && abs(*v.determinant) != 1) {
        return *v.determinant == bareiss_det(exponent_matrix(tuple, b.rank()));
      }
      // The endpoint must admit no reduction at all.
      auto again = nielsen_reduce(*v.reduced);
      return again.complete && again.reduced == *v.reduced && !is_signed_letters(again.reduced);
    }
    if (v.method == "determinant") {
      return v.determinant && abs(*v.determinant) != 1
             && *v.determinant == bareiss_det(exponent_matrix(tuple, b.rank()));
    }
    if (v.method == "dihedral") {
      auto r = DihedralBackend::element(tuple[0]);
      auto s = DihedralBackend::element(tuple[1]);
      return r.reflect || (r.k != 1 && r.k != -1) || !s.reflect;
    }
    if (v.method == "finite") {
      auto const* f = dynamic_cast<CosetTableBackend const*>(&b);
      return f != nullptr && !f->is_automorphic_image(tuple);
    }
    return false;
  }

  OrbitVerdict to_verdict(SemiYes const& y, Backend const&) {
    OrbitVerdict v;
    v.decision       = Decision::InOrbit;
    v.method         = "semi-yes";
    v.inverse_images = y.terms.components;
    if (y.conditional_on_hopfian) {
      v.note = "conditional on Hopfianity";
    }
    return v;
  }

  OrbitVerdict to_verdict(SemiNo const& n) {
    OrbitVerdict v;
    v.decision       = Decision::NotInOrbit;
    v.method         = "semi-no";
    v.failed_relator = n.failed_relator;
    v.violation      = n.violation;
    return v;
  }

  ////////////////////////////////////////////////////////////////////////
  // Semi-deciders
  ////////////////////////////////////////////////////////////////////////

  std::optional<SemiYes> orbit_semi_yes(Backend const& b, WordTuple const& tuple,
                                        Budget const& budget) {
    check_shape(b.rank(), tuple);
    if (failing_relator(b, tuple)) {
      return std::nullopt;
    }
    auto const gens = b.presentation().generator_tuple();
    WordTuple  gens_nf = b.normal_forms(gens);
    WordTuple  terms(gens.size());
    std::vector<bool> found(gens.size(), false);
    std::size_t       missing = gens.size();
    ElementCursor     cursor(b);
    std::unordered_map<Word, Word> images;
    for (std::uint64_t i = 0; i < budget.term_cap && missing > 0; ++i) {
      auto w = cursor.next();
      if (!w) {
        break;
      }
      // Reuse the image of the one-letter-shorter prefix when it was a candidate.
      Word image;
      if (w->empty()) {
        image = Word();
      } else {
        auto const& ls = w->letters();
        auto        it = images.find(Word(std::vector<Letter>(ls.begin(), ls.end() - 1)));
        auto const  last = ls.back();
        auto const  step = last.inverse ? tuple[last.gen].inverse() : tuple[last.gen];
        image = it != images.end() ? b.normal_form(it->second * step)
                                   : b.normal_form(substitute(*w, tuple));
      }
      images.emplace(*w, image);
      for (std::size_t j = 0; j < gens.size(); ++j) {
        if (!found[j] && image == gens_nf[j]) {
          found[j] = true;
          terms[j] = *w;
          --missing;
        }
      }
    }
    if (missing > 0) {
      return std::nullopt;
    }
    SemiYes y{make_term_tuple(gens.size(), terms), !b.capabilities().hopfian_certified};
    auto    back = evaluate_terms(y.terms, tuple);
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (!b.equal(back[j], gens[j])) {
        throw std::logic_error("expressing terms failed to re-check");
      }
    }
    return y;
  }

  std::optional<SemiNo> orbit_semi_no(BackendPtr const& b, WordTuple const& tuple,
                                      Budget const& budget, ThetaIndex* index) {
    check_shape(b->rank(), tuple);
    if (auto i = failing_relator(*b, tuple)) {
      return SemiNo{i, std::nullopt};
    }
    std::optional<ThetaIndex> local;
    if (index == nullptr) {
      local.emplace(b);
      index = &*local;
    } else if (index->backend_ptr() != b) {
      throw Error("theta index belongs to a different backend");
    }
    auto n = index->conjunct_count(budget.term_cap);
    if (auto x = index->find_violation(tuple, n, budget)) {
      return SemiNo{std::nullopt, std::move(x)};
    }
    return std::nullopt;
  }

  DovetailOrbit orbit_dovetail(BackendPtr const& b, WordTuple const& tuple,
                               std::uint64_t max_rounds, ThetaIndex* index) {
    auto at = [](std::uint64_t round) { return Budget::scalar(std::uint64_t{1} << round); };
    auto result = dovetail_decide(
        [&](std::uint64_t r) { return orbit_semi_yes(*b, tuple, at(r)).has_value(); },
        [&](std::uint64_t r) { return orbit_semi_no(b, tuple, at(r), index).has_value(); },
        max_rounds);
    if (auto* l = std::get_if<Landed>(&result)) {
      return {l->value ? Decision::InOrbit : Decision::NotInOrbit, l->round};
    }
    return {Decision::Unknown, std::get<BudgetExhausted>(result).rounds};
  }

}  // namespace wwp
