#include <sstream>
#include <stdexcept>

#include "wwp/error.hpp"
#include "wwp/orbit.hpp"

namespace wwp {

  IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
      : _rows(rows), _cols(cols), _data(rows * cols) {
    if (rows == 0 || cols == 0) {
      throw Error("matrix dimensions must be positive");
    }
  }

  IntMatrix::IntMatrix(std::vector<std::vector<BigInt>> rows)
      : IntMatrix(rows.size(), rows.empty() ? 0 : rows[0].size()) {
    for (std::size_t i = 0; i < _rows; ++i) {
      if (rows[i].size() != _cols) {
        throw Error("ragged matrix");
      }
      for (std::size_t j = 0; j < _cols; ++j) {
        (*this)(i, j) = rows[i][j];
      }
    }
  }

  IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
    if (a._cols != b._rows) {
      throw ArityMismatch("matrix shapes do not compose");
    }
    IntMatrix c(a._rows, b._cols);
    for (std::size_t i = 0; i < a._rows; ++i) {
      for (std::size_t k = 0; k < a._cols; ++k) {
        if (a(i, k) == 0) {
          continue;
        }
        for (std::size_t j = 0; j < b._cols; ++j) {
          c(i, j) += a(i, k) * b(k, j);
        }
      }
    }
    return c;
  }

  std::string format_matrix(IntMatrix const& m) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i > 0) {
        out << "; ";
      }
      for (std::size_t j = 0; j < m.cols(); ++j) {
        out << (j > 0 ? " " : "") << m(i, j);
      }
    }
    return out.str();
  }

  IntMatrix parse_matrix(std::string_view text) {
    std::vector<std::vector<BigInt>> rows;
    std::size_t                      start = 0;
    while (start <= text.size()) {
      auto end = text.find(';', start);
      auto row = text.substr(start, end == std::string_view::npos ? std::string_view::npos
                                                                  : end - start);
      std::istringstream  in{std::string(row)};
      std::vector<BigInt> r;
      std::string         tok;
      while (in >> tok) {
        try {
          r.emplace_back(tok);
        } catch (std::exception const&) {
          throw Error("bad matrix entry '" + tok + "'");
        }
      }
      if (r.empty()) {
        throw Error("empty matrix row");
      }
      rows.push_back(std::move(r));
      if (end == std::string_view::npos) {
        break;
      }
      start = end + 1;
    }
    return IntMatrix(std::move(rows));
  }

  namespace {
    void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        std::swap(m(a, j), m(b, j));
      }
    }
    void negate_row(IntMatrix& m, std::size_t a) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        m(a, j) = -m(a, j);
      }
    }
    // row a -= q * row b
    void sub_row(IntMatrix& m, std::size_t a, std::size_t b, BigInt const& q) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        m(a, j) -= q * m(b, j);
      }
    }

    BigInt floor_div(BigInt const& a, BigInt const& b) {
      BigInt q = a / b;
      if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
      }
      return q;
    }
  }  // namespace

  BigInt bareiss_det(IntMatrix m) {
    if (m.rows() != m.cols()) {
      throw ArityMismatch("determinant of a non-square matrix");
    }
    std::size_t const n    = m.rows();
    BigInt            prev = 1;
    int               sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (m(k, k) == 0) {
        std::size_t r = k + 1;
        while (r < n && m(r, k) == 0) {
          ++r;
        }
        if (r == n) {
          return 0;
        }
        swap_rows(m, k, r);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        }
        m(i, k) = 0;
      }
      prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
  }

  HnfResult hnf_and_det(IntMatrix const& input) {
    IntMatrix         h = input;
    IntMatrix         u = IntMatrix::identity(input.rows());
    std::size_t const rows = h.rows(), cols = h.cols();
    int               sign = 1;
    std::size_t       r    = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
      while (true) {
        // Smallest nonzero entry at or below row r becomes the pivot.
        std::optional<std::size_t> pivot;
        for (std::size_t i = r; i < rows; ++i) {
          if (h(i, c) != 0 && (!pivot || abs(h(i, c)) < abs(h(*pivot, c)))) {
            pivot = i;
          }
        }
        if (!pivot) {
          break;
        }
        if (*pivot != r) {
          swap_rows(h, *pivot, r);
          swap_rows(u, *pivot, r);
          sign = -sign;
        }
        bool clean = true;
        for (std::size_t i = r + 1; i < rows; ++i) {
          if (h(i, c) != 0) {
            BigInt q = h(i, c) / h(r, c);
            sub_row(h, i, r, q);
            sub_row(u, i, r, q);
            clean = clean && h(i, c) == 0;
          }
        }
        if (clean) {
          break;
        }
      }
      if (h(r, c) == 0) {
        continue;
      }
      if (h(r, c) < 0) {
        negate_row(h, r);
        negate_row(u, r);
        sign = -sign;
      }
      for (std::size_t i = 0; i < r; ++i) {
        BigInt q = floor_div(h(i, c), h(r, c));
        if (q != 0) {
          sub_row(h, i, r, q);
          sub_row(u, i, r, q);
        }
      }
      ++r;
    }
    BigInt det = 0;
    if (rows == cols) {
      det = sign;
      for (std::size_t i = 0; i < rows; ++i) {
        det *= h(i, i);
      }
      if (det != bareiss_det(input)) {
        throw std::logic_error("determinant mismatch between Hermite form and Bareiss");
      }
    }
    return HnfResult{std::move(h), std::move(u), std::move(det)};
  }

  IntMatrix exponent_matrix(WordTuple const& t, std::size_t rank) {
    IntMatrix m(t.size(), rank);
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (Letter l : t[i].letters()) {
        if (l.gen >= rank) {
          throw Error("word uses a generator outside the presentation");
        }
        m(i, l.gen) += l.sign();
      }
    }
    return m;
  }

}  // namespace wwp
