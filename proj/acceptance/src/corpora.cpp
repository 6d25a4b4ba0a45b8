#include "corpora.hpp"

#include <cstdlib>
#include <memory>
#include <random>

namespace wwp::acceptance {

  Corpus free_corpus() {
    Corpus c{"F2", std::make_shared<FreeGroupBackend>(2), {}};
    auto   words = oracle::reduced_words(5, 2);
    for (auto const& u : words) {
      for (auto const& v : words) {
        if (u.size() + v.size() <= 5) {
          c.tuples.push_back({oracle::word_of(u), oracle::word_of(v)});
        }
      }
    }
    return c;
  }

  std::vector<AbelianSample> abelian_samples() {
    std::mt19937_64            rng(20240601);
    std::vector<AbelianSample> out;
    auto pick = [&](long long lo, long long hi) {
      return std::uniform_int_distribution<long long>(lo, hi)(rng);
    };
    auto identity = [](std::size_t n) {
      std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
      for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = 1;
      }
      return m;
    };
    for (int i = 0; i < 1000; ++i) {
      auto const n = static_cast<std::size_t>(pick(1, 4));
      auto       m = identity(n);
      auto const steps = pick(0, 10);
      for (long long s = 0; s < steps; ++s) {
        // Left multiplication by an elementary matrix acts on rows.
        auto const kind = n == 1 ? 1 : pick(0, 2);
        auto const r    = static_cast<std::size_t>(pick(0, static_cast<long long>(n) - 1));
        if (kind == 1) {
          for (auto& x : m[r]) {
            x = -x;
          }
          continue;
        }
        auto q = static_cast<std::size_t>(pick(0, static_cast<long long>(n) - 2));
        if (q >= r) {
          ++q;
        }
        if (kind == 0) {
          auto const sign = pick(0, 1) == 0 ? 1 : -1;
          for (std::size_t j = 0; j < n; ++j) {
            m[r][j] += sign * m[q][j];
          }
        } else {
          std::swap(m[r], m[q]);
        }
      }
      out.push_back({n, std::move(m), true});
    }
    for (int i = 0; i < 1000; ++i) {
      auto const n = static_cast<std::size_t>(pick(1, 4));
      std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
      do {
        for (auto& row : m) {
          for (auto& x : row) {
            x = pick(-3, 3);
          }
        }
      } while (std::llabs(oracle::cofactor_det(m)) == 1);
      out.push_back({n, std::move(m), false});
    }
    return out;
  }

  WordTuple matrix_tuple(std::vector<std::vector<long long>> const& m) {
    WordTuple out;
    for (auto const& row : m) {
      oracle::Letters l;
      for (std::size_t j = 0; j < row.size(); ++j) {
        auto const g = static_cast<int>(j + 1);
        for (long long e = 0; e < std::llabs(row[j]); ++e) {
          l.push_back(row[j] > 0 ? g : -g);
        }
      }
      out.push_back(oracle::word_of(l));
    }
    return out;
  }

  std::vector<Corpus> abelian_corpora() {
    std::vector<Corpus> out;
    for (std::size_t n = 1; n <= 4; ++n) {
      out.push_back({"Z^" + std::to_string(n), std::make_shared<FreeAbelianBackend>(n), {}});
    }
    for (auto const& s : abelian_samples()) {
      out[s.n - 1].tuples.push_back(matrix_tuple(s.matrix));
    }
    return out;
  }

  Corpus dihedral_corpus() {
    Corpus c{"D_inf", std::make_shared<DihedralBackend>(), {}};
    auto   words = oracle::reduced_words(4, 2);
    for (auto const& u : words) {
      for (auto const& v : words) {
        c.tuples.push_back({oracle::word_of(u), oracle::word_of(v)});
      }
    }
    return c;
  }

}  // namespace wwp::acceptance
