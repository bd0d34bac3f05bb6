#pragma once

#include <stdexcept>
#include <string>

namespace qtp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Division by zero, zero ansatz, and other violated scalar preconditions.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The zero ansatz vector was passed where a linearization is requested.
class ZeroAnsatz : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A polynomial input whose degree makes the requested operation meaningless.
class DegreeError : public Error {
 public:
  using Error::Error;
};

/// A structural hypothesis of a construction does not hold for the given blocks.
class HypothesisViolated : public Error {
 public:
  using Error::Error;
};

/// The system has infinitely many (or an undetermined set of) common zeros.
class NonGenericSystem : public Error {
 public:
  using Error::Error;
};

/// The block re-draw budget of the linearization procedure was exhausted.
class ConditionUnsatisfiable : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Internal identity check failed; always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace qtp
