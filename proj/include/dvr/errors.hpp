#pragma once

#include <stdexcept>
#include <string>

namespace dvr {

/// Malformed text input (elements, field specs, matrices).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An argument lies outside the domain of an operation, e.g. the residue
/// of an element with negative valuation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivisionByZero : public DomainError {
 public:
  DivisionByZero() : DomainError("division by zero") {}
  explicit DivisionByZero(const std::string& what) : DomainError(what) {}
};

}  // namespace dvr
