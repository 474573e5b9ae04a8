#pragma once

#include <stdexcept>
#include <string>

namespace gerbeflow {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in incompatible spaces (variable count, ring order, chart).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An argument is outside the domain of an operation (bad index, arity, degree).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Requested feature is outside what the library implements.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Bad command-line or configuration input.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace gerbeflow
