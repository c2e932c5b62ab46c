#pragma once

#include <stdexcept>

namespace scanhmm {

// Bad input: unreadable files, schema violations, invalid models. CLI exit 2.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numerical failure: non-finite results, singular systems. CLI exit 3.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A variational fit that cannot proceed (degenerate data). The simulation
// harness records these as failed trials instead of aborting the sweep.
struct EstimationError : NumericalError {
  using NumericalError::NumericalError;
};

}  // namespace scanhmm
