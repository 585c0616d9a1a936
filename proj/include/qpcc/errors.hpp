#pragma once

#include <stdexcept>
#include <string>

namespace qpcc {

// Caller supplied a parameter outside its documented domain.
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input violates a precondition that the caller is expected to guarantee
// (e.g. a non-Hermitian matrix handed to the Hermitian eigensolver).
struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// No closed form / linear map exists for the requested combination.
struct UnsupportedError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Value lies outside the regime in which an inverse map is valid.
struct RegimeError : std::domain_error {
  using std::domain_error::domain_error;
};

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A local variance vanished, so the correlation coefficient is undefined.
struct UndefinedPccError : NumericError {
  using NumericError::NumericError;
};

struct InvalidStateError : NumericError {
  using NumericError::NumericError;
};

// Observable spectrum has fewer than two distinct values.
struct DegenerateSpectrumError : ParameterError {
  using ParameterError::ParameterError;
};

}  // namespace qpcc
