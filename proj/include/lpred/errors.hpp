#pragma once

#include <stdexcept>
#include <string>

namespace lpred {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: bad JSON, missing field, shape mismatch.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A geometric precondition failed (zero point, plane through the origin,
/// vertical plane, origin incident to a plane).
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// Vector or matrix sizes do not agree, or a dimension is out of range.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A point that was required to be strictly interior is not.
class NotInteriorError : public Error {
 public:
  using Error::Error;
};

/// A solver produced a result that fails its own certificate.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace lpred
