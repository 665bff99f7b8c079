#pragma once

#include <stdexcept>

namespace ising2q {

// a matrix handed to a hermitian-only routine failed the symmetry check
struct NonHermitianInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// a matrix that must be unitary is not (within tolerance)
struct NonUnitaryInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// physical parameters violate their invariants (h <= 0, ...)
struct InvalidParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// integrator step too coarse for the fastest drive period
struct StepTooLarge : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// analytic form only defined for a common drive frequency
struct UnequalDriveFrequencies : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// malformed or invalid run configuration; message carries file/field
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ising2q
