#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lmc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  SingularMatrixError() : Error("matrix is singular over GF(2)") {}
};

class GateError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed matrix or synthesis text. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace lmc
