#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace bfp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: bad polynomial text, wrong list length, rank
/// mismatch, invalid characteristic, and so on.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Polynomial text that does not follow the grammar.
class ParseError : public ValidationError {
 public:
  ParseError(std::size_t position, const std::string& what)
      : ValidationError("parse error at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A configured computational cap (Groebner pair queue) was exceeded.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// An iteration that should stabilize did not do so before its cap.
class NoStabilizationError : public Error {
 public:
  NoStabilizationError(const std::string& what, std::string previous, std::string last)
      : Error(what), previous_(std::move(previous)), last_(std::move(last)) {}

  const std::string& previous() const noexcept { return previous_; }
  const std::string& last() const noexcept { return last_; }

 private:
  std::string previous_;
  std::string last_;
};

/// Self-check failure inside the library; always a bug, never user error.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace bfp
