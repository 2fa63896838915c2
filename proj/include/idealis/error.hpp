#pragma once

#include <stdexcept>
#include <string>

namespace idealis {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in polynomial rings with different numbers of variables.
class ArityMismatch : public Error {
 public:
  using Error::Error;
};

/// A precondition on an argument does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The input exceeds a documented size cap; nothing was computed.
class Refusal : public Error {
 public:
  using Error::Error;
};

}  // namespace idealis
