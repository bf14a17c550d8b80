#pragma once

#include <stdexcept>
#include <string>

namespace etaeigen {

/// Malformed eta-quotient text.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Eta quotient whose weighted sum is not divisible by 24.
class NotModularError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace etaeigen
