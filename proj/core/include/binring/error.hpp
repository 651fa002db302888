#pragma once

#include <stdexcept>
#include <string>

namespace binring {

/// Raised for malformed input or violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal identity that the mathematics guarantees fails.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace binring
