#pragma once

#include <stdexcept>
#include <string>

namespace aslab {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates an operation's precondition (bad field, non-monic input, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Malformed field spec, element, polynomial or matrix text.
class ParseError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Input is valid but larger than the supported size caps.
class CapExceeded : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Two independent computations disagree, or a proven identity failed to hold.
// Seeing one of these means there is a bug somewhere.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace aslab
