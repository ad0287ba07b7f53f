#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oneone {

/// Argument outside an operation's mathematical domain (n < 2, h < 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A generator map has no image for a letter that occurs in the word.
class MalformedMapError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Internal cross-check failed. Indicates a bug, never bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Text input does not match the word grammar. `column` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t column)
      : std::runtime_error(message + " at column " + std::to_string(column)),
        column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

}  // namespace oneone
