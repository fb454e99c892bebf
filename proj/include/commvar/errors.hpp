#pragma once

#include <stdexcept>
#include <string>

namespace commvar {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A division that was required to be exact left a nonzero remainder.
class InexactDivision : public Error {
 public:
  InexactDivision() : Error("inexact division") {}
};

/// Power-series expansion of a rational function whose denominator vanishes at 0.
class PoleAtOrigin : public Error {
 public:
  PoleAtOrigin() : Error("pole at origin") {}
};

/// Bad user input: malformed Cartan type, rank out of range, caps exceeded.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A computed quantity broke an invariant that holds for correct class data
/// (non-integral or negative Betti numbers, non-character decompositions).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace commvar
