#pragma once

// Plain-text Cayley table files:
//
//   cayley v1 <n>
//   <n lines of n whitespace-separated indices in 0..n-1>
//
// Row g, column h holds the index of g*h; index 0 is the identity. Lines
// whose first non-blank character is '#' and blank lines are ignored.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cycgrp/group.hpp"

namespace cycgrp {

class CayleyFormatError : public std::runtime_error {
 public:
  /// line and column are 1-based; 0 means "not tied to a position".
  CayleyFormatError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// Parses and runs the full group-axiom check. Throws CayleyFormatError.
Group parse_cayley(std::string_view text, std::string name = {});

std::string emit_cayley(const Group& g);

Group read_cayley_file(const std::string& path);
void write_cayley_file(const Group& g, const std::string& path);

}  // namespace cycgrp
