#pragma once

#include <stdexcept>
#include <string>

namespace qtrace {

/// Shape or register mismatch between operands.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed permutation or wiring list.
class PermutationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Well-formed file that violates the expected schema.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numeric contract violation (non-normalizable state, non-finite value, ...).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Root finder failed to converge or got a degenerate polynomial.
class RootFindingError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace qtrace
