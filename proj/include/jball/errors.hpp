#pragma once

#include <stdexcept>
#include <string>

namespace jball {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: bad coordinates, bad domain parameters, bad JSON.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A point that must lie in the open domain G does not.
class OutsideDomain : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// The operation is not defined for this domain variant (e.g. unbounded G).
class Unsupported : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Numeric machinery could not produce an answer at the requested resolution.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

}  // namespace jball
