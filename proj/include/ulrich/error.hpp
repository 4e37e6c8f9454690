#pragma once

#include <stdexcept>
#include <string>

namespace ulrich {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid modulus, zero inverse, or arithmetic mixing two moduli.
class FieldError : public Error {
 public:
  using Error::Error;
};

/// Incompatible matrix or vector sizes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Parameters (d, r, k, ...) outside the admissible range, including the
/// rank parity constraint for even d.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent presentation / certificate file.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations that must agree did not.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace ulrich
