#pragma once

#include <stdexcept>
#include <string>

namespace quatlat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid mathematical input: singular bases, non-orders, indefinite forms...
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed configuration or serialized data.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// The request is outside what the library supports (e.g. indefinite algebras
/// for class-set computations).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A configurable enumeration budget was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace quatlat
