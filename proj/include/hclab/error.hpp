#pragma once

#include <stdexcept>
#include <string>

namespace hclab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed literal, config or certificate document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called with an input outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A norm bound or threshold has no closed form / exceeded its scan limit.
class BoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace hclab
