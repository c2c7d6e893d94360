#pragma once

#include <stdexcept>

namespace framemult {

// Error taxonomy shared with the CLI exit codes:
//   ConditionError / SingularMatrixError -> 2
//   IoError                              -> 3
//   ShapeError                           -> 4

/// Dimension or length disagreement between operands.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A method's sufficient condition does not hold for the given data
/// (perturbation too large, wrong symbol sign, input not a frame, ...).
/// Distinct from numerical singularity: the operator may well be invertible,
/// only the particular guarantee does not apply.
class ConditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerically singular matrix handed to a direct solver.
class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File and stream problems, including parse failures.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace framemult
