#pragma once

#include <stdexcept>
#include <string>

namespace kronmul {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A documented precondition of an operation was violated by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Natural-number subtraction with a larger subtrahend.
class UnderflowError : public Error {
 public:
  using Error::Error;
};

/// A shift or halving that was required to be exact discarded nonzero bits.
class InexactError : public Error {
 public:
  using Error::Error;
};

/// Overlapped-digit reconstruction found inconsistent carries.
class ReconstructionError : public Error {
 public:
  using Error::Error;
};

/// The coefficient ring lacks an operation the requested algorithm needs
/// (e.g. halving in Z/2^kZ).
class RingError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace kronmul
