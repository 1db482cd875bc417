#pragma once

#include <stdexcept>
#include <string>

namespace conjprob {

/// A computation would exceed a configured enumeration or closure ceiling.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller violated a documented precondition (weights differ, k out of range).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A recursive bound needs a value that is neither exact nor bounded yet.
class MissingDependencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input; line() is 1-based, 0 when not line-oriented.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace conjprob
