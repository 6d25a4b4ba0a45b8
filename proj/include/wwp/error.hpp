#ifndef WWP_ERROR_HPP_
#define WWP_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wwp {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          _line(line),
          _column(column) {}

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::size_t _line;
    std::size_t _column;
  };

  class ArityMismatch : public Error {
   public:
    using Error::Error;
  };

  // Raised by a rewriting backend whose rules were never shown confluent.
  class NotCertified : public Error {
   public:
    using Error::Error;
  };

  class NotAHomomorphism : public Error {
   public:
    using Error::Error;
  };

  class NoOrbitDecider : public Error {
   public:
    using Error::Error;
  };

  class Inconsistent : public Error {
   public:
    using Error::Error;
  };

  class UnboundVariable : public Error {
   public:
    using Error::Error;
  };

  // Both semi-procedures of a dovetail landed in the same round.
  class ContradictoryCertificates : public Error {
   public:
    using Error::Error;
  };

  class MalformedFormula : public Error {
   public:
    using Error::Error;
  };

}  // namespace wwp

#endif  // WWP_ERROR_HPP_
