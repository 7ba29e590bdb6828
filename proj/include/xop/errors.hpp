#pragma once

#include <stdexcept>
#include <string>

namespace xop {

/// Parameters outside the admissible range of an operation.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical procedure could not deliver its contract (root
/// certification, iteration budget, quadrature order).
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A root sits within the classification buffer of an interval endpoint.
class BoundaryAmbiguity : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

}  // namespace xop
