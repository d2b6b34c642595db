#pragma once

#include <stdexcept>
#include <string>

namespace permlab {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition on an argument does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two operands belong to different field contexts.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

/// Division by zero or inversion of zero.
class ZeroDivision : public Error {
 public:
  using Error::Error;
};

/// A configured search or size cap would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace permlab
