#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace scknot {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. `position` is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Input is well-formed but violates a mathematical precondition
// (non-pure braid, even strand count, index out of range, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured size cap was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Self-check failure inside an algorithm; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace scknot
