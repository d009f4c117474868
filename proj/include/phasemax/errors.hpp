#pragma once

#include <stdexcept>

namespace phasemax {

// Parameter or domain violations (bad dimensions, angles out of range,
// zero vectors where a direction is required). The CLI maps these to
// exit code 2.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Numerical failures discovered while solving. The CLI maps these to
// exit code 1.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The normal matrix of the splitting solver is rank-deficient, so the
// x-update has no unique solution. Only possible when the constraint
// matrix has fewer rows than columns.
class SingularNormalEquations : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// estimate_crossover was given success rates that never straddle 1/2.
class NoCrossingError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace phasemax
