#pragma once

#include <stdexcept>
#include <string>

namespace fracwave {

/// Raised when an argument violates an operation's precondition
/// (order out of range, t <= 0, malformed grid or signal).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A series or quadrature could not reach the requested tolerance.
class NonConvergent : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The finite-difference grid fails the solver's validity predicate.
class UnstableGrid : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A delta initial condition cannot be placed on the finite-difference grid.
class DeltaNotRepresentable : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace fracwave
