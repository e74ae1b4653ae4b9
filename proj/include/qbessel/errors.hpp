#pragma once

#include <stdexcept>
#include <string>

namespace qbessel {

// Argument outside the domain of a function (e.g. evaluating x^{-1} at 0).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Parameter tuple violates a precondition (zero denominator, r^2 != ab, ...).
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Requested mode is not available for the scalar type, e.g. an infinite
// product over exact rationals.
struct UnsupportedModeError : std::logic_error {
  using std::logic_error::logic_error;
};

struct DivergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numeric procedure did not reach its tolerance within the configured cap.
struct AccuracyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotCentralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qbessel
