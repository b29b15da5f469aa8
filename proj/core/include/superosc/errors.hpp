#pragma once

#include <stdexcept>
#include <string>

namespace superosc {

/// A caller broke a documented precondition (order mismatch, index past the
/// truncation order, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A parameter lies outside the mathematical domain of the function, e.g. a
/// lower hypergeometric parameter in {0, -1, -2, ...}.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The input is mathematically meaningful but this library does not evaluate
/// it (pFq with p > q in floating point).
class UnsupportedDomain : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Unknown identity or suite name, malformed textual input.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace superosc
