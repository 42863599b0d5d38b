#pragma once

#include <stdexcept>
#include <string>

namespace meanlab {

/// Input outside the mathematical domain of an operation (non-positive
/// spectrum under log, singular congruence, p = 0 for Q_p, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A precondition stated by the caller's contract was violated
/// (dimension mismatch, parameter out of range, hypothesis not met).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The computation ran but could not certify its result: solver
/// non-convergence, inconsistent dual criteria, broken implication chain.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input files or flags.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace meanlab
