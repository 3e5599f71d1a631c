#pragma once

#include <stdexcept>
#include <string>

namespace aftlab {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Domain invariant violated by caller-supplied values (CLI exit code 2).
struct ValidationError : Error {
  using Error::Error;
};

// File, format, or schema problems (CLI exit code 2).
struct DataError : Error {
  using Error::Error;
};

// Divergence, non-convergence, singular systems (CLI exit code 3).
struct NumericalError : Error {
  using Error::Error;
};

}  // namespace aftlab
