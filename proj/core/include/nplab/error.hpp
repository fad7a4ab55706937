#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nplab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `offset()` is the 0-based byte position of the
/// first offending character within the parsed string.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A caller violated an operation's documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An operation refused because its input exceeds a configured size cap.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// A construction produced a labeling that failed its own check. Always a defect.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace nplab
