#pragma once

#include <stdexcept>
#include <string>

namespace sqf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called with input outside its contract.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The input exceeds what an exact search is allowed to handle.
class SizeCapError : public Error {
 public:
  using Error::Error;
};

/// A construction step failed although the underlying theory guarantees it.
/// Seeing this means there is a bug in the library.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace sqf
