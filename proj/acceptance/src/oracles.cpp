#include "wwp/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>

namespace wwp::oracle {

  Letters letters_of(Word const& w) {
    Letters out;
    for (auto l : w.letters()) {
      auto g = static_cast<int>(l.gen) + 1;
      out.push_back(l.inverse ? -g : g);
    }
    return out;
  }

  Word word_of(Letters const& l) {
    std::vector<Letter> out;
    for (int x : l) {
      out.push_back(Letter{static_cast<std::uint32_t>(std::abs(x) - 1), x < 0});
    }
    return Word(std::move(out));
  }

  Letters reduce(Letters const& raw) {
    Letters out;
    for (int x : raw) {
      if (!out.empty() && out.back() == -x) {
        out.pop_back();
      } else {
        out.push_back(x);
      }
    }
    return out;
  }

  Letters inverse(Letters const& w) {
    Letters out(w.rbegin(), w.rend());
    for (auto& x : out) {
      x = -x;
    }
    return out;
  }

  Letters concat(Letters const& u, Letters const& v) {
    Letters raw = u;
    raw.insert(raw.end(), v.begin(), v.end());
    return reduce(raw);
  }

  std::vector<Letters> reduced_words(std::size_t max_length, int k) {
    std::vector<Letters> out{{}};
    std::size_t          from = 0;
    for (std::size_t len = 1; len <= max_length; ++len) {
      auto const to = out.size();
      for (auto i = from; i < to; ++i) {
        for (int g = 1; g <= k; ++g) {
          for (int x : {g, -g}) {
            if (!out[i].empty() && out[i].back() == -x) {
              continue;
            }
            auto w = out[i];
            w.push_back(x);
            out.push_back(std::move(w));
          }
        }
      }
      from = to;
    }
    return out;
  }

  PermGroup::PermGroup(std::vector<std::vector<int>> gens) {
    if (gens.empty()) {
      throw std::invalid_argument("no generators");
    }
    auto const degree = gens.front().size();
    std::vector<int> id(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      id[i] = static_cast<int>(i);
    }
    // Apply p first, then q.
    auto then = [](std::vector<int> const& p, std::vector<int> const& q) {
      std::vector<int> r(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) {
        r[i] = q[static_cast<std::size_t>(p[i])];
      }
      return r;
    };
    std::map<std::vector<int>, int> index{{id, 0}};
    _perms.push_back(id);
    _spelling.push_back({});
    for (std::size_t head = 0; head < _perms.size(); ++head) {
      for (std::size_t g = 0; g < gens.size(); ++g) {
        for (int sgn : {1, -1}) {
          auto step = gens[g];
          if (sgn < 0) {
            std::vector<int> inv(degree);
            for (std::size_t i = 0; i < degree; ++i) {
              inv[static_cast<std::size_t>(step[i])] = static_cast<int>(i);
            }
            step = inv;
          }
          auto next = then(_perms[head], step);
          if (index.emplace(next, static_cast<int>(_perms.size())).second) {
            auto sp = _spelling[head];
            sp.push_back(sgn * static_cast<int>(g + 1));
            _perms.push_back(std::move(next));
            _spelling.push_back(std::move(sp));
          }
        }
      }
    }
    auto const n = _perms.size();
    _mul.resize(n * n);
    _inv.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        auto z = index.at(then(_perms[x], _perms[y]));
        _mul[x * n + y] = z;
        if (z == 0) {
          _inv[x] = static_cast<int>(y);
        }
      }
    }
    for (auto const& g : gens) {
      _gens.push_back(index.at(g));
    }
  }

  int PermGroup::eval(Letters const& w, std::vector<int> const& values) const {
    int acc = identity();
    for (int x : w) {
      auto v = values.at(static_cast<std::size_t>(std::abs(x) - 1));
      acc    = mul(acc, x > 0 ? v : inv(v));
    }
    return acc;
  }

  int PermGroup::eval(Word const& w, std::vector<int> const& values) const {
    return eval(letters_of(w), values);
  }

  std::size_t PermGroup::generated_order(std::vector<int> const& elems) const {
    std::set<int>    seen{identity()};
    std::vector<int> queue{identity()};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (int e : elems) {
        auto z = mul(queue[head], e);
        if (seen.insert(z).second) {
          queue.push_back(z);
        }
      }
    }
    return seen.size();
  }

  Affine compose(Affine const& f, Affine const& g) {
    return Affine{f.sign * g.sign, f.sign * g.shift + f.shift};
  }

  Affine invert(Affine const& f) {
    return Affine{f.sign, -f.sign * f.shift};
  }

  Affine eval_dihedral(Letters const& w, Affine const& r, Affine const& s) {
    Affine acc;
    for (int x : w) {
      auto const& base = std::abs(x) == 1 ? r : s;
      acc              = compose(acc, x > 0 ? base : invert(base));
    }
    return acc;
  }

  long long cofactor_det(std::vector<std::vector<long long>> const& m) {
    auto const n = m.size();
    if (n == 0) {
      return 1;
    }
    if (n == 1) {
      return m[0][0];
    }
    long long det = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (m[0][c] == 0) {
        continue;
      }
      std::vector<std::vector<long long>> minor;
      for (std::size_t r = 1; r < n; ++r) {
        std::vector<long long> row;
        for (std::size_t j = 0; j < n; ++j) {
          if (j != c) {
            row.push_back(m[r][j]);
          }
        }
        minor.push_back(std::move(row));
      }
      auto term = m[0][c] * cofactor_det(minor);
      det += c % 2 == 0 ? term : -term;
    }
    return det;
  }

  std::vector<long long> exponent_sums(Letters const& w, int k) {
    std::vector<long long> out(static_cast<std::size_t>(k), 0);
    for (int x : w) {
      out.at(static_cast<std::size_t>(std::abs(x) - 1)) += x > 0 ? 1 : -1;
    }
    return out;
  }

  bool nielsen_reduced(std::vector<Letters> const& tuple) {
    std::vector<Letters> pm;
    for (auto const& u : tuple) {
      if (u.empty()) {
        return false;
      }
      pm.push_back(u);
      pm.push_back(inverse(u));
    }
    auto len = [](Letters const& w) { return static_cast<long long>(w.size()); };
    for (auto const& u : pm) {
      for (auto const& v : pm) {
        auto uv = concat(u, v);
        if (uv.empty()) {
          continue;
        }
        if (len(uv) < len(u) || len(uv) < len(v)) {
          return false;
        }
        for (auto const& w : pm) {
          if (concat(v, w).empty()) {
            continue;
          }
          if (len(concat(uv, w)) <= len(u) - len(v) + len(w)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool signed_letter_permutation(std::vector<Letters> const& tuple, int k) {
    if (tuple.size() != static_cast<std::size_t>(k)) {
      return false;
    }
    std::set<int> used;
    for (auto const& u : tuple) {
      if (u.size() != 1 || !used.insert(std::abs(u[0])).second) {
        return false;
      }
    }
    return true;
  }

}  // namespace wwp::oracle
