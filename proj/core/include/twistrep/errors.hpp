#pragma once

#include <stdexcept>
#include <string>

namespace twistrep {

/// Violated precondition or argument outside the supported domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numeric operation could not be carried out (singular matrix, no nullspace, ...).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Signals a construction bug rather than a mathematical outcome.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace twistrep
