#include "wwp/coset.hpp"

#include <deque>
#include <numeric>

namespace wwp {

  std::uint32_t CosetTable::act(std::uint32_t coset, Word const& w) const {
    for (Letter l : w.letters()) {
      coset = act(coset, l);
    }
    return coset;
  }

  std::vector<std::uint32_t> CosetTable::generator_images() const {
    std::vector<std::uint32_t> out;
    for (auto const& row : action) {
      out.push_back(row.empty() ? 0 : row[0]);
    }
    return out;
  }

  namespace {

    constexpr std::int64_t kUndefined = -1;

    struct Overflow {};

    class Enumerator {
     public:
      Enumerator(std::size_t n_gens, std::uint64_t cap) : _cols(2 * n_gens), _cap(cap) {
        new_coset();
      }

      std::int64_t get(std::int64_t c, std::uint32_t x) const {
        return _table[static_cast<std::size_t>(c) * _cols + x];
      }
      void set(std::int64_t c, std::uint32_t x, std::int64_t v) {
        _table[static_cast<std::size_t>(c) * _cols + x] = v;
      }

      bool live(std::int64_t c) const {
        return _parent[static_cast<std::size_t>(c)] == c;
      }

      std::uint64_t defined() const noexcept {
        return _parent.size();
      }

      void define(std::int64_t c, std::uint32_t x) {
        auto d = new_coset();
        set(c, x, d);
        set(d, x ^ 1U, c);
      }

      void scan_and_fill(std::int64_t c, std::vector<std::uint32_t> const& w) {
        if (w.empty()) {
          return;
        }
        std::int64_t   f = c, b = c;
        std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
        auto           at = [&](std::ptrdiff_t k) { return w[static_cast<std::size_t>(k)]; };
        while (true) {
          while (i <= j && get(f, at(i)) != kUndefined) {
            f = get(f, at(i));
            ++i;
          }
          if (i > j) {
            if (f != b) {
              coincidence(f, b);
            }
            return;
          }
          while (j >= i && get(b, at(j) ^ 1U) != kUndefined) {
            b = get(b, at(j) ^ 1U);
            --j;
          }
          if (j < i) {
            coincidence(f, b);
            return;
          }
          if (i == j) {
            set(f, at(i), b);
            set(b, at(i) ^ 1U, f);
            return;
          }
          define(f, at(i));
        }
      }

      std::int64_t rep(std::int64_t c) {
        auto root = c;
        while (_parent[static_cast<std::size_t>(root)] != root) {
          root = _parent[static_cast<std::size_t>(root)];
        }
        while (_parent[static_cast<std::size_t>(c)] != root) {
          auto next                          = _parent[static_cast<std::size_t>(c)];
          _parent[static_cast<std::size_t>(c)] = root;
          c                                  = next;
        }
        return root;
      }

      void coincidence(std::int64_t a, std::int64_t b) {
        std::deque<std::int64_t> queue;
        merge(a, b, queue);
        while (!queue.empty()) {
          auto q = queue.front();
          queue.pop_front();
          for (std::uint32_t x = 0; x < _cols; ++x) {
            auto e = get(q, x);
            if (e == kUndefined) {
              continue;
            }
            set(e, x ^ 1U, kUndefined);
            auto e1 = rep(q);
            auto e2 = rep(e);
            if (get(e1, x) != kUndefined) {
              merge(e2, get(e1, x), queue);
            } else if (get(e2, x ^ 1U) != kUndefined) {
              merge(e1, get(e2, x ^ 1U), queue);
            } else {
              set(e1, x, e2);
              set(e2, x ^ 1U, e1);
            }
          }
        }
      }

      std::vector<std::int64_t> const& table() const noexcept {
        return _table;
      }

     private:
      std::int64_t new_coset() {
        if (_parent.size() >= _cap) {
          throw Overflow{};
        }
        auto id = static_cast<std::int64_t>(_parent.size());
        _parent.push_back(id);
        _table.resize(_table.size() + _cols, kUndefined);
        return id;
      }

      void merge(std::int64_t k, std::int64_t l, std::deque<std::int64_t>& queue) {
        k = rep(k);
        l = rep(l);
        if (k == l) {
          return;
        }
        if (k > l) {
          std::swap(k, l);
        }
        _parent[static_cast<std::size_t>(l)] = k;
        queue.push_back(l);
      }

      std::size_t               _cols;
      std::uint64_t             _cap;
      std::vector<std::int64_t> _parent;
      std::vector<std::int64_t> _table;
    };

    std::vector<std::uint32_t> codes(Word const& w) {
      std::vector<std::uint32_t> out;
      for (Letter l : w.letters()) {
        out.push_back(l.code());
      }
      return out;
    }

  }  // namespace

  std::variant<CosetTable, CosetOverflow> coset_enumerate(Presentation const& p,
                                                          WordTuple const&    subgroup_gens,
                                                          std::uint64_t       cap) {
    std::size_t const n    = p.rank();
    std::size_t const cols = 2 * n;
    std::vector<std::vector<std::uint32_t>> relators;
    for (auto const& r : p.relators()) {
      relators.push_back(codes(r));
    }
    Enumerator e(n, cap == 0 ? 1 : cap);
    try {
      for (auto const& h : subgroup_gens) {
        e.scan_and_fill(0, codes(h));
      }
      for (std::int64_t c = 0; c < static_cast<std::int64_t>(e.defined()); ++c) {
        for (auto const& r : relators) {
          if (!e.live(c)) {
            break;
          }
          e.scan_and_fill(c, r);
        }
        if (!e.live(c)) {
          continue;
        }
        for (std::uint32_t x = 0; x < cols; ++x) {
          if (e.get(c, x) == kUndefined) {
            e.define(c, x);
          }
        }
      }
    } catch (Overflow const&) {
      return CosetOverflow{e.defined()};
    }

    // Compact the live cosets, keeping their relative order.
    std::vector<std::int64_t> renumber(e.defined(), kUndefined);
    std::uint32_t             live = 0;
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(e.defined()); ++c) {
      if (e.live(c)) {
        renumber[static_cast<std::size_t>(c)] = live++;
      }
    }
    CosetTable t;
    t.n_cosets = live;
    t.action.assign(n, std::vector<std::uint32_t>(live));
    t.inverse_action.assign(n, std::vector<std::uint32_t>(live));
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(e.defined()); ++c) {
      if (!e.live(c)) {
        continue;
      }
      auto row = static_cast<std::uint32_t>(renumber[static_cast<std::size_t>(c)]);
      for (std::uint32_t g = 0; g < n; ++g) {
        t.action[g][row] =
            static_cast<std::uint32_t>(renumber[static_cast<std::size_t>(e.get(c, 2 * g))]);
        t.inverse_action[g][row] =
            static_cast<std::uint32_t>(renumber[static_cast<std::size_t>(e.get(c, 2 * g + 1))]);
      }
    }
    return t;
  }

  bool is_closed_table(CosetTable const& t, Presentation const& p) {
    if (t.action.size() != p.rank()) {
      return false;
    }
    for (std::uint32_t g = 0; g < p.rank(); ++g) {
      std::vector<bool> hit(t.n_cosets, false);
      for (std::uint32_t c = 0; c < t.n_cosets; ++c) {
        auto d = t.action[g][c];
        if (d >= t.n_cosets || hit[d] || t.inverse_action[g][d] != c) {
          return false;
        }
        hit[d] = true;
      }
    }
    for (auto const& r : p.relators()) {
      for (std::uint32_t c = 0; c < t.n_cosets; ++c) {
        if (t.act(c, r) != c) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace wwp
