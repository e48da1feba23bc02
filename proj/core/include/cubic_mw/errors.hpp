#pragma once

#include <stdexcept>
#include <string>

namespace cubic_mw {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated an operation's precondition. The CLI maps these to exit code 2.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ZeroQuadruple : public PreconditionError {
 public:
  ZeroQuadruple() : PreconditionError("quadruple (0,0,0,0) is not a projective point") {}
};

/// The point index does not cover the requested index bound with a complete
/// h_sum range, so "not found" lookups could be silently wrong.
class IndexTooSmall : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class OutOfRange : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// File or stream failures. The CLI maps these to exit code 3.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace cubic_mw
