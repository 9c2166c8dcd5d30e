#pragma once

#include <stdexcept>
#include <string>

namespace qhyp {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input or a value rejected at type construction.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Inversion or normalization of a zero quaternion.
class ZeroDivisor : public Error {
 public:
  using Error::Error;
};

// Two points of a tuple coincide projectively (vanishing inner product).
class CoincidentPoints : public Error {
 public:
  using Error::Error;
};

// A mathematical precondition of an operation does not hold.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

// Two independent numerical routes disagree; tolerances are too tight or the
// input is numerically defective.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

// Requested size exceeds a configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace qhyp
