#pragma once

#include <stdexcept>
#include <string>

namespace baker {

/// Raised when an argument violates an operation's precondition.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an operation is invoked outside the parameter regime it is
/// defined for (e.g. the Moran equation with beta1 + beta2 >= 1).
class RegimeError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace baker
