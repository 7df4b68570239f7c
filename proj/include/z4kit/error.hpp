#pragma once

#include <stdexcept>
#include <string>

namespace z4kit {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed matrix / distribution files. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// A documented precondition of an operation does not hold for the given input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Work would exceed a fixed enumeration guard.
class GuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace z4kit
