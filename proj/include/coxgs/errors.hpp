#ifndef COXGS_ERRORS_HPP_
#define COXGS_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coxgs {

  // Bad arguments: letters out of range, unoriented rules, zero caps, ...
  class InvalidInput : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // A documented precondition of an operation does not hold. Distinct from
  // a negative answer.
  class PreconditionError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

  // Size guards (BFS element limits, counter overflow).
  class ResourceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class ParseError : public std::runtime_error {
   public:
    ParseError(std::size_t line, std::string const& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg),
          _line(line) {}

    std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

}  // namespace coxgs

#endif  // COXGS_ERRORS_HPP_
