#pragma once

#include <stdexcept>
#include <string>

namespace tempdual {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live on different numbers of blocks.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A subgroup argument is not contained in the group it is compared with.
class ContainmentError : public Error {
 public:
  using Error::Error;
};

// An argument lies outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed or inconsistent user input.
class InputError : public Error {
 public:
  using Error::Error;
};

// A documented precondition was not met by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A cross-check inside the engine failed; always a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace tempdual
