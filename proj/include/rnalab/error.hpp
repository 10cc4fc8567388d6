#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rnalab {

// Base for every error raised by the library. Callers that only care about
// "the request was invalid" catch this; the CLI maps it to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A size cap (brute-force order, oracle order, enumeration order) was exceeded.
class CapError : public Error {
 public:
  using Error::Error;
};

// Malformed edge-list or graph6 input.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace rnalab
