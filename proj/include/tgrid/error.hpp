#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tgrid {

/// Raised when an operation is called outside its domain (point off the grid,
/// non-prime segment, function of the wrong class, ...).
class precondition_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exhaustive routine is asked to run on a grid larger than its
/// hard size limit. Nothing is ever silently truncated.
class guard_exceeded : public precondition_error {
public:
  using precondition_error::precondition_error;
};

/// Raised when a postcondition that a theorem guarantees does not hold.
class internal_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Malformed text document. `line()` is 1-based; 0 means "whole document".
class parse_error : public std::runtime_error {
public:
  parse_error(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

}  // namespace tgrid
