#ifndef RESINV_ERRORS_HPP
#define RESINV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace resinv {

// A documented precondition of an operation does not hold for the given input.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual or JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed; always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace resinv

#endif
