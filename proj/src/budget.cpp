#include "wwp/budget.hpp"


namespace wwp {

  Budget Budget::scalar(std::uint64_t n) {
    return Budget{n, n, n * n, n};
  }

  bool covers(Budget const& larger, Budget const& smaller) noexcept {
    return larger.term_cap >= smaller.term_cap && larger.witness_cap >= smaller.witness_cap
           && larger.step_cap >= smaller.step_cap && larger.length_cap >= smaller.length_cap;
  }

  WitnessCursor::WitnessCursor(Backend const& b, std::size_t n, std::optional<WordTuple> start)
      : _elements(b), _n(n), _start(std::move(start)), _index(n, 0) {
    if (_start) {
      *_start = b.normal_forms(*_start);
    }
    if (auto order = b.order()) {
      _bound = *order;
    }
  }

  // Next composition of _sum into _n parts in lexicographic order; moves to
  // the next sum when the current one is used up.
  bool WitnessCursor::advance() {
    if (_n == 0) {
      if (!_fresh) {
        return false;
      }
      _fresh = false;
      return true;
    }
    if (_fresh) {
      _fresh = false;
      _index.assign(_n, 0);
      return true;
    }
    while (true) {
      // Rightmost i < n-1 with a nonzero tail after it.
      std::uint64_t tail = _index[_n - 1];
      std::size_t   i    = _n - 1;
      bool          found = false;
      while (i > 0) {
        --i;
        if (tail > 0) {
          found = true;
          break;
        }
        tail += _index[i];
      }
      if (found) {
        ++_index[i];
        for (std::size_t j = i + 1; j + 1 < _n; ++j) {
          _index[j] = 0;
        }
        _index[_n - 1] = tail - 1;
      } else {
        ++_sum;
        if (_bound && _sum > _n * (*_bound - 1)) {
          return false;
        }
        _index.assign(_n, 0);
        _index[_n - 1] = _sum;
      }
      if (!_bound) {
        return true;
      }
      bool ok = true;
      for (auto v : _index) {
        ok = ok && v < *_bound;
      }
      if (ok) {
        return true;
      }
    }
  }

  std::optional<WordTuple> WitnessCursor::next() {
    if (_start && !_start_done) {
      _start_done = true;
      ++_position;
      return _start;
    }
    while (advance()) {
      WordTuple t;
      bool      exists = true;
      for (auto i : _index) {
        auto const* w = _elements.at(static_cast<std::size_t>(i));
        if (w == nullptr) {
          exists = false;
          break;
        }
        t.push_back(*w);
      }
      if (!exists) {
        // A finite group whose order was not known upfront.
        _bound = _elements.known_size();
        continue;
      }
      if (_start && t == *_start) {
        continue;
      }
      ++_position;
      return t;
    }
    return std::nullopt;
  }

}  // namespace wwp
