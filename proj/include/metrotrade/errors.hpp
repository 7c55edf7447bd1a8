#pragma once

#include <stdexcept>
#include <string>

namespace metrotrade {

/// Precondition violation on an operation's inputs.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact enumeration requested beyond the supported sample budget.
class BudgetError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Phase outside the monotone branch of an oscillating fidelity.
class BranchError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Bound requested for a probe that carries no Fisher information.
class NoInformationError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Inherent-precision step 1/n cannot be reached from the given phase.
class UnreachableError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Regression over a degenerate resource grid.
class FitError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace metrotrade
