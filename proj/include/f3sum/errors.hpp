#pragma once

#include <stdexcept>
#include <string>

namespace f3sum {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic attempted between a float64 and a rational Number.
class BackendMismatch : public Error {
 public:
  using Error::Error;
};

/// A denominator Pochhammer symbol vanished at an index the series reaches.
class DenominatorPole : public Error {
 public:
  using Error::Error;
};

/// Raised only when a caller asks for strict convergence.
class NotConverged : public Error {
 public:
  using Error::Error;
};

class InvalidIndex : public Error {
 public:
  using Error::Error;
};

class InvalidInstance : public Error {
 public:
  using Error::Error;
};

/// (1-t)^{-a} requested at t = 1.
class PoleAtOne : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operation outside its mathematical domain (e.g. a non-integer power of an
/// exact rational).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace f3sum
