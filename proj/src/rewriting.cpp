#include "wwp/rewriting.hpp"

#include <algorithm>
#include <sstream>

#include "wwp/error.hpp"

namespace wwp {

  bool shortlex_less(Letters const& u, Letters const& v) {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
  }

  namespace {

    bool ends_with(Letters const& w, Letters const& suffix) {
      return suffix.size() <= w.size()
             && std::equal(suffix.begin(), suffix.end(), w.end() - static_cast<std::ptrdiff_t>(suffix.size()));
    }

    Letters to_letters(Word const& w) {
      return Letters(w.letters().begin(), w.letters().end());
    }

    RewriteRule oriented(Letters a, Letters b) {
      if (shortlex_less(a, b)) {
        std::swap(a, b);
      }
      return RewriteRule{std::move(a), std::move(b)};
    }

    void sort_rules(std::vector<RewriteRule>& rules) {
      std::sort(rules.begin(), rules.end(), [](auto const& x, auto const& y) {
        if (x.lhs != y.lhs) {
          return shortlex_less(x.lhs, y.lhs);
        }
        return shortlex_less(x.rhs, y.rhs);
      });
    }

    // Free cancellation rules x x^-1 -> 1, materialised for overlap checks.
    std::vector<RewriteRule> cancellation_rules(std::size_t n) {
      std::vector<RewriteRule> out;
      for (std::uint32_t c = 0; c < 2 * n; ++c) {
        auto l = Letter::from_code(c);
        out.push_back(RewriteRule{{l, l.inv()}, {}});
      }
      return out;
    }

    template <typename F>
    void for_each_critical_pair(RewriteRule const& r1, RewriteRule const& r2, F&& f) {
      auto const& l1 = r1.lhs;
      auto const& l2 = r2.lhs;
      // Proper overlaps: a suffix of l1 equal to a prefix of l2.
      for (std::size_t ov = 1; ov < l1.size() && ov < l2.size(); ++ov) {
        if (std::equal(l1.end() - static_cast<std::ptrdiff_t>(ov), l1.end(), l2.begin())) {
          Letters a = r1.rhs;
          a.insert(a.end(), l2.begin() + static_cast<std::ptrdiff_t>(ov), l2.end());
          Letters b(l1.begin(), l1.end() - static_cast<std::ptrdiff_t>(ov));
          b.insert(b.end(), r2.rhs.begin(), r2.rhs.end());
          f(a, b);
        }
      }
      // l2 inside l1.
      if (l2.size() <= l1.size() && !(l1 == l2 && r1.rhs == r2.rhs)) {
        for (std::size_t at = 0; at + l2.size() <= l1.size(); ++at) {
          if (std::equal(l2.begin(), l2.end(), l1.begin() + static_cast<std::ptrdiff_t>(at))) {
            Letters b(l1.begin(), l1.begin() + static_cast<std::ptrdiff_t>(at));
            b.insert(b.end(), r2.rhs.begin(), r2.rhs.end());
            b.insert(b.end(), l1.begin() + static_cast<std::ptrdiff_t>(at + l2.size()), l1.end());
            f(r1.rhs, b);
          }
        }
      }
    }

    RewriteRules without(RewriteRules const& r, std::size_t skip) {
      RewriteRules out;
      out.alphabet_size = r.alphabet_size;
      for (std::size_t i = 0; i < r.rules.size(); ++i) {
        if (i != skip) {
          out.rules.push_back(r.rules[i]);
        }
      }
      return out;
    }

    void interreduce(RewriteRules& r) {
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t i = 0; i < r.rules.size(); ++i) {
          auto others = without(r, i);
          auto lhs    = others.reduce(r.rules[i].lhs);
          auto rhs    = others.reduce(r.rules[i].rhs);
          if (lhs != r.rules[i].lhs) {
            r.rules.erase(r.rules.begin() + static_cast<std::ptrdiff_t>(i));
            if (lhs != rhs) {
              r.rules.push_back(oriented(std::move(lhs), std::move(rhs)));
            }
            changed = true;
            break;
          }
          r.rules[i].rhs = std::move(rhs);
        }
      }
      sort_rules(r.rules);
    }

  }  // namespace

  Letters RewriteRules::reduce(Letters const& w) const {
    Letters out;
    Letters todo(w.rbegin(), w.rend());
    while (!todo.empty()) {
      Letter l = todo.back();
      todo.pop_back();
      if (!out.empty() && out.back() == l.inv()) {
        out.pop_back();
        continue;
      }
      out.push_back(l);
      for (auto const& rule : rules) {
        if (ends_with(out, rule.lhs)) {
          out.resize(out.size() - rule.lhs.size());
          todo.insert(todo.end(), rule.rhs.rbegin(), rule.rhs.rend());
          break;
        }
      }
    }
    return out;
  }

  Word RewriteRules::reduce(Word const& w) const {
    return Word(reduce(to_letters(w)));
  }

  bool RewriteRules::is_irreducible(Letters const& w) const {
    return reduce(w) == w;
  }

  RewriteRules initial_rules(Presentation const& p) {
    RewriteRules out;
    out.alphabet_size = p.rank();
    auto add          = [&](Letters w) {
      RewriteRule r{std::move(w), {}};
      if (std::find(out.rules.begin(), out.rules.end(), r) == out.rules.end()) {
        out.rules.push_back(std::move(r));
      }
    };
    for (auto const& rel : p.relators()) {
      for (auto const& base : {rel, rel.inverse()}) {
        auto w = to_letters(base);
        // Cyclically reduce before rotating.
        std::size_t s = 0, e = w.size();
        while (e - s >= 2 && w[s] == w[e - 1].inv()) {
          ++s;
          --e;
        }
        Letters core(w.begin() + static_cast<std::ptrdiff_t>(s), w.begin() + static_cast<std::ptrdiff_t>(e));
        for (std::size_t k = 0; k < core.size(); ++k) {
          Letters rot(core.begin() + static_cast<std::ptrdiff_t>(k), core.end());
          rot.insert(rot.end(), core.begin(), core.begin() + static_cast<std::ptrdiff_t>(k));
          add(std::move(rot));
        }
      }
    }
    sort_rules(out.rules);
    return out;
  }

  RewriteRules parse_rules(std::string_view text, std::vector<std::string> const& names) {
    RewriteRules out;
    out.alphabet_size = names.size();
    std::size_t line_no = 0;
    std::size_t start   = 0;
    while (start <= text.size()) {
      auto end  = text.find('\n', start);
      auto line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
        auto arrow = line.find("->");
        if (arrow == std::string_view::npos) {
          throw ParseError("expected 'lhs -> rhs'", line_no, 1);
        }
        try {
          auto lhs = parse_word(line.substr(0, arrow), names);
          auto rhs = parse_word(line.substr(arrow + 2), names);
          if (lhs != rhs) {
            out.rules.push_back(oriented(to_letters(lhs), to_letters(rhs)));
          }
        } catch (ParseError const& e) {
          throw ParseError(e.what(), line_no, e.column());
        }
      }
      if (end == std::string_view::npos) {
        break;
      }
      start = end + 1;
    }
    return out;
  }

  std::string format_rules(RewriteRules const& r, std::vector<std::string> const& names) {
    std::ostringstream out;
    for (auto const& rule : r.rules) {
      out << format_word(Word(rule.lhs), names) << " -> " << format_word(Word(rule.rhs), names)
          << '\n';
    }
    return out.str();
  }

  bool is_locally_confluent(RewriteRules const& rules) {
    auto all = rules.rules;
    auto cancel = cancellation_rules(rules.alphabet_size);
    all.insert(all.end(), cancel.begin(), cancel.end());
    bool ok = true;
    for (auto const& r1 : all) {
      for (auto const& r2 : all) {
        for_each_critical_pair(r1, r2, [&](Letters const& a, Letters const& b) {
          if (ok && rules.reduce(a) != rules.reduce(b)) {
            ok = false;
          }
        });
        if (!ok) {
          return false;
        }
      }
    }
    return true;
  }

  std::variant<RewriteRules, CompletionOverflow> kb_complete(RewriteRules const& input,
                                                             std::size_t         cap) {
    RewriteRules r = input;
    r.confluence_certified = false;
    interreduce(r);
    auto const  cancel    = cancellation_rules(r.alphabet_size);
    std::size_t additions = 0;
    while (true) {
      if (r.rules.size() > cap || additions > 4 * cap) {
        return CompletionOverflow{r.rules.size()};
      }
      auto all = r.rules;
      all.insert(all.end(), cancel.begin(), cancel.end());
      bool added = false;
      for (std::size_t i = 0; i < all.size() && !added; ++i) {
        for (std::size_t j = 0; j < all.size() && !added; ++j) {
          for_each_critical_pair(all[i], all[j], [&](Letters const& a, Letters const& b) {
            if (added) {
              return;
            }
            auto ra = r.reduce(a);
            auto rb = r.reduce(b);
            if (ra != rb) {
              r.rules.push_back(oriented(std::move(ra), std::move(rb)));
              ++additions;
              added = true;
            }
          });
        }
      }
      if (!added) {
        break;
      }
      interreduce(r);
    }
    r.confluence_certified = is_locally_confluent(r);
    return r;
  }

}  // namespace wwp
