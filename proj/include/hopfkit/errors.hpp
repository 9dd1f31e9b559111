#ifndef HOPFKIT_ERRORS_HPP
#define HOPFKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hopfkit {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConductorMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A structural check failed where the caller required it to pass
/// (e.g. a constructor whose output does not satisfy the Hopf axioms).
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace hopfkit

#endif  // HOPFKIT_ERRORS_HPP
