#pragma once

#include <stdexcept>
#include <string>

namespace latpoly {

// Exact integer arithmetic left the range of the coefficient type.
class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Malformed textual or JSON input (bad characters, bad structure).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed input that violates an operation's precondition, or an object
// that cannot be reached by a generation procedure.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace latpoly
