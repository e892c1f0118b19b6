#pragma once

#include <stdexcept>
#include <string>

namespace hybrid {

/// Invalid or inconsistent configuration input. Maps to CLI exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parameter outside the domain of an operation.
struct InvalidParameter : ConfigError {
  using ConfigError::ConfigError;
};

/// Numerical failure during evaluation. Maps to CLI exit code 3.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BroadbandInjectionSingular : NumericError {
  using NumericError::NumericError;
};
struct IntegrationNotConverged : NumericError {
  using NumericError::NumericError;
};
struct AliasingError : NumericError {
  using NumericError::NumericError;
};
struct IllConditioned : NumericError {
  using NumericError::NumericError;
};
struct LengthMismatch : NumericError {
  using NumericError::NumericError;
};
struct NotPSD : NumericError {
  using NumericError::NumericError;
};
struct RegimeViolation : NumericError {
  using NumericError::NumericError;
};
struct RecordTooShort : NumericError {
  using NumericError::NumericError;
};
struct NonFinite : NumericError {
  using NumericError::NumericError;
};
struct DegenerateEnsemble : NumericError {
  using NumericError::NumericError;
};
struct UnstableSystem : NumericError {
  using NumericError::NumericError;
};

}  // namespace hybrid
