#pragma once

#include <stdexcept>
#include <string>

namespace opmeans {

// Bad user data: malformed files, asymmetric or indefinite matrices, invalid ranges.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of a function (x <= 0, v outside [0,1], ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Eigensolver non-convergence or floating-point overflow inside a decomposition.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace opmeans
