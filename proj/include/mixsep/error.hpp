#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mixsep {

enum class ErrorKind {
  NodeNotFound,
  MalformedWalk,
  InvalidQuery,
  ClassViolation,
  SizeLimit,
  ParseError,
  UnsatisfiableSpec,
};

const char* to_string(ErrorKind kind);

/// Single exception type for every contract violation in the library; the
/// kind tells callers (and the CLI exit-code mapping) what went wrong.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + reason),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace mixsep
