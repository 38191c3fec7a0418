#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "chowkit/polynomial.hpp"

namespace chowkit {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& msg)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

// Syntax: sums of products of numbers, variables, parenthesized
// subexpressions and integer powers, e.g. `x1^2*x2 - 3/4*x3^5`.
// Division is allowed only by nonzero constants. Errors carry 1-based
// columns; `line` is passed through for error reporting.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring, int line = 1, int column_offset = 0);

// Comma separated list; an empty string gives an empty list.
std::vector<Polynomial> parse_polynomial_list(const std::string& text, const RingPtr& ring, int line = 1,
                                              int column_offset = 0);

}  // namespace chowkit
