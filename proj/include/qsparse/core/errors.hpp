#pragma once

#include <stdexcept>
#include <string>

namespace qsparse {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (shape mismatch, bad range, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A numerical object failed its invariants (negative eigenvalue, zero norm, ...).
class InvalidState : public Error {
 public:
  using Error::Error;
};

/// The requested size exceeds what a dense construction supports.
class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed input data or configuration.
class ParseError : public Error {
 public:
  using Error::Error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidArgument(message);
}

}  // namespace qsparse
