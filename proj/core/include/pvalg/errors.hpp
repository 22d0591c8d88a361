#pragma once

#include <stdexcept>
#include <string>

namespace pvalg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different variable contexts, ranks or algebras.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (polynomials, words, PV selectors).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A parameter is outside the range an operation accepts.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// A b-function was requested for an element spread over several degrees.
class NotHomogeneous : public Error {
 public:
  using Error::Error;
};

/// A polynomial expected to be S_{n+1}-symmetric is not.
class NotSymmetric : public Error {
 public:
  using Error::Error;
};

/// A coefficient of a decomposition fails the T0 membership test.
class MembershipFailure : public Error {
 public:
  using Error::Error;
};

/// The element lies in T but not in the polynomial-coefficient subalgebra T0[X,Y].
class NotInT0XY : public Error {
 public:
  using Error::Error;
};

/// A concrete operator image is not a scalar multiple of the expected cell vector.
class NotProportional : public Error {
 public:
  using Error::Error;
};

}  // namespace pvalg
