#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace expnev {

/// Base for every error the library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::string message, std::vector<std::string> expected = {})
      : Error(message + " at offset " + std::to_string(offset)),
        offset_(offset),
        expected_(std::move(expected)) {}
  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Well-formed text that cannot be lowered into the exponential-polynomial ring.
class LoweringError : public Error {
 public:
  using Error::Error;
};

/// An operation's stated precondition does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Numerical routine could not reach a reliable answer.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace expnev
