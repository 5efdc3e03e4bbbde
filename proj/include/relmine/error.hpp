#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace relmine {

/// Malformed or inconsistent input data (bad lines, unknown edges, size
/// mismatches). The CLI maps this to exit code 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public DataError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace relmine
