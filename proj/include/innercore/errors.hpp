#pragma once

#include <stdexcept>

namespace innercore {

// Process exit codes shared by the CLI and the pipeline drivers.
enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,     // unreadable/malformed input, bad flags or config
  kExitNumerical = 2,      // singular covariance after ridge escalation etc.
  kExitInternal = 3,       // broken internal invariant
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace innercore
