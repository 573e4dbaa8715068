#pragma once

#include <stdexcept>
#include <string>

namespace ap5 {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A curve was used where good reduction is required.
class BadReductionError : public Error {
 public:
  using Error::Error;
};

/// Input data does not match its schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Eigenvalue data needed by a computation is missing.
class DataGapError : public Error {
 public:
  using Error::Error;
};

/// A probabilistic test ran out of usable inputs before reaching a verdict.
class InconclusiveError : public Error {
 public:
  using Error::Error;
};

/// Configuration file or command-line input is invalid.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Remote data service failure (transport or payload).
class FetchError : public Error {
 public:
  using Error::Error;
};

}  // namespace ap5
