#pragma once

#include <stdexcept>
#include <string>

namespace ffh {

// Base of every error raised by the library. The CLI maps the subclasses
// onto process exit codes (input errors -> 2, unsupported -> 3).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or ill-typed input: bad syntax, zero divisor polynomial,
// mismatched coefficient fields, violated preconditions.
class InputError : public Error {
 public:
  using Error::Error;
};

// Parse failure with the byte offset at which it was detected.
class SyntaxError : public InputError {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : InputError(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// The instance is mathematically fine but outside what the implementation
// can certify: tower budget exceeded, irreducibility undecidable, degree cap.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// A series precision ceiling was reached before the requested quantity
// (usually an order of vanishing) could be resolved.
class PrecisionError : public UnsupportedError {
 public:
  using UnsupportedError::UnsupportedError;
};

// Arithmetic on a non-invertible element of a tower whose defining
// polynomial turned out to be reducible.
class ZeroDivisorError : public Error {
 public:
  using Error::Error;
};

}  // namespace ffh
