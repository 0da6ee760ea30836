#pragma once

#include <stdexcept>
#include <string>

namespace banet {

// Arguments outside an operation's domain (bad index, empty update set, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Request exceeds a hard size cap; the message names the cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Rejected text input; positions are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                           ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace banet
