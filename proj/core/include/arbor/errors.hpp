#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arbor {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unknown builtin group or lookup by name.
class NameError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input; carries a 1-based position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class UndeclaredGenerator : public ParseError {
 public:
  using ParseError::ParseError;
};

class InvalidPermutation : public ParseError {
 public:
  using ParseError::ParseError;
};

class NotASubgroup : public Error {
 public:
  using Error::Error;
};

class NotTransitive : public Error {
 public:
  using Error::Error;
};

class DepthUnknown : public Error {
 public:
  using Error::Error;
};

class ClusterAmbiguous : public Error {
 public:
  using Error::Error;
};

/// A parameter outside its documented range.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace arbor
