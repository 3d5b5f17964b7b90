#pragma once

#include <stdexcept>
#include <string>

namespace irea {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Tensor/image dimensions do not match what an operation requires.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A mosaic carries a Bayer pattern an operation cannot accept.
class PatternError : public Error {
 public:
  using Error::Error;
};

/// A numeric argument is outside its valid domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An object violates one of its declared invariants.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A file on disk is corrupt, truncated, or has the wrong format.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A configuration is inconsistent or contains unknown keys.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// I/O failure; the message names the failing path.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Training aborted (e.g. non-finite loss); message carries diagnostics.
class TrainAbort : public Error {
 public:
  using Error::Error;
};

}  // namespace irea
