#pragma once

#include <stdexcept>
#include <string>

namespace qmem {

/// Base class for every error raised by the library. The CLI maps the
/// concrete subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix shapes that do not fit the operation (or the supported sizes).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An argument outside the domain of an operation (negative step, positive
/// kappa, unknown subsystem index, invalid density matrix ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure did not produce a trustworthy result.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent run configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace qmem
