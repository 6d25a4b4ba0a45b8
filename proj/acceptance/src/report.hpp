// Small helpers for assembling a criterion result.

#ifndef WWP_ACCEPTANCE_REPORT_HPP_
#define WWP_ACCEPTANCE_REPORT_HPP_

#include <chrono>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "wwp/acceptance.hpp"

namespace wwp::acceptance {

  class Stopwatch {
   public:
    double seconds() const {
      return std::chrono::duration<double>(std::chrono::steady_clock::now() - _start).count();
    }

   private:
    std::chrono::steady_clock::time_point _start = std::chrono::steady_clock::now();
  };

  // Counts failed checks per label and keeps the first few messages.
  class Faults {
   public:
    void fail(std::string const& what) {
      ++_count;
      if (_examples.size() < 3) {
        _examples.push_back(what);
      }
    }
    void check(bool ok, std::string const& what) {
      if (!ok) {
        fail(what);
      }
    }
    std::size_t count() const noexcept {
      return _count;
    }
    std::string summary() const {
      if (_count == 0) {
        return "";
      }
      std::ostringstream s;
      s << _count << " failed checks, e.g.";
      for (auto const& e : _examples) {
        s << " [" << e << "]";
      }
      return s.str();
    }

   private:
    std::size_t              _count = 0;
    std::vector<std::string> _examples;
  };

  inline void note(Options const& o, std::string const& line) {
    if (o.log != nullptr) {
      *o.log << "  " << line << std::endl;
    }
  }

  inline CriterionResult finish(int id, std::string name, Faults const& f, std::string stats,
                                Stopwatch const& clock, double limit) {
    CriterionResult r;
    r.id         = id;
    r.name       = std::move(name);
    r.seconds    = clock.seconds();
    r.time_limit = limit;
    r.passed     = f.count() == 0 && (limit == 0 || r.seconds < limit);
    r.detail     = std::move(stats);
    if (f.count() != 0) {
      r.detail += "; " + f.summary();
    }
    if (limit != 0 && r.seconds >= limit) {
      r.detail += "; over the time limit";
    }
    return r;
  }

}  // namespace wwp::acceptance

#endif  // WWP_ACCEPTANCE_REPORT_HPP_
