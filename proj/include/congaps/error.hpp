#pragma once

#include <stdexcept>
#include <string>

namespace congaps {

// Precondition failures of the numeric routines. The CLI maps every subclass
// except IoError to exit status 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class CapacityError : public Error {
 public:
  using Error::Error;
};

class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

// Quadrature or iteration failed to meet its target.
class NumericError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace congaps
