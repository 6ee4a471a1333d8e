#pragma once

#include <stdexcept>

namespace qdual {

// Base class for every failure this library reports.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input has the wrong shape (not 2^n, mismatched sizes, odd qubit split).
struct DimensionError : Error {
  using Error::Error;
};

// Matrix fails the unitarity check at the configured tolerance.
struct NotUnitaryError : Error {
  using Error::Error;
};

// State vector fails the unit-norm precondition.
struct NotNormalizedError : Error {
  using Error::Error;
};

// Eigensolver could not reach the residual tolerance on any retry.
struct ConvergenceError : Error {
  using Error::Error;
};

// Malformed text input (matrix/state files, numeric literals, gate names).
struct ParseError : Error {
  using Error::Error;
};

// Overlap is zero (or rounds to zero): the penalty term would be infinite.
struct ZeroOverlapError : Error {
  using Error::Error;
};

// No program inside the budget has usable overlap with the target.
struct NoCandidateError : Error {
  using Error::Error;
};

}  // namespace qdual
