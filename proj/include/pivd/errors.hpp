#pragma once

#include <stdexcept>
#include <string>

namespace pivd {

// Thrown when an operation would exceed its documented input-size guard.
struct ResourceLimitError : std::runtime_error {
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input bytes. line/column are 1-based, 0 = unknown.
struct ParseError : std::runtime_error {
  std::size_t line = 0;
  std::size_t column = 0;
  ParseError(const std::string& what, std::size_t line_, std::size_t column_ = 0)
      : std::runtime_error(what + " (line " + std::to_string(line_) + ")"),
        line(line_),
        column(column_) {}
};

}  // namespace pivd
