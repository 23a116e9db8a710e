#pragma once

#include <stdexcept>
#include <string>

namespace cf4cf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument or precondition violation.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A key that must be unique appeared twice.
class DuplicateEntry : public Error {
 public:
  using Error::Error;
};

// A performance table does not cover the (dataset, algorithm, measure)
// combinations required by the operation.
class IncompleteTable : public Error {
 public:
  using Error::Error;
};

// Malformed input file. Carries the path and the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::string path, int line, const std::string& message)
      : Error(path + ":" + std::to_string(line) + ": " + message),
        path_(std::move(path)),
        line_(line) {}

  const std::string& path() const noexcept { return path_; }
  int line() const noexcept { return line_; }

 private:
  std::string path_;
  int line_;
};

}  // namespace cf4cf
