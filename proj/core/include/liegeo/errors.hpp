#pragma once

#include <stdexcept>

namespace liegeo {

/// Malformed inputs: bad dimensions, unparsable config, out-of-range indices.
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Domain validity failures: non-positive-definite gram, deformation vector of
/// norm >= 1, degenerate flag planes.
class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace liegeo
