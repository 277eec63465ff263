#pragma once

#include <stdexcept>
#include <string>

namespace cuspkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid Cartan type, bad flag value, malformed input file.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Word not reduced, or reduced but not of maximal length.
class InvalidWordError : public Error {
 public:
  using Error::Error;
};

// Argument outside the operation's domain (non-homogeneous element, non-root entry).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Requested feature deliberately not implemented (E-series denominators, module-level delta on a shadow line).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed. Always a bug or a broken convention, never bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace cuspkit
