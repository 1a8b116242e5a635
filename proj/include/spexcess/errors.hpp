#pragma once

#include <stdexcept>
#include <string>

namespace spexcess {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input: unreadable, malformed, or outside the supported graph class.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class DisconnectedError : public InputError {
 public:
  DisconnectedError() : InputError("graph must be connected") {}
};

class LoopOrMultiEdgeError : public InputError {
 public:
  using InputError::InputError;
};

/// A request whose parameters fall outside an operation's domain.
class DegreeError : public InputError {
 public:
  using InputError::InputError;
};

class HypothesisError : public InputError {
 public:
  using InputError::InputError;
};

class MissingParamError : public InputError {
 public:
  using InputError::InputError;
};

/// Floating-point pipeline failed to produce a trustworthy result.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NonPositiveEigenvectorError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class DegenerateMeasureError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// A proven identity or inequality failed beyond tolerance. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace spexcess
