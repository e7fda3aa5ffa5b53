#ifndef CONFCOH_PARSE_HPP
#define CONFCOH_PARSE_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "confcoh/poly.hpp"

namespace confcoh {

/// Parse failure with 1-based line/column of the offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Parses the polynomial grammar: integers, p/q rationals, lam1..lamN (lam
/// alone is lam1), d for the derivation, any other identifier as a parameter,
/// + - * ^ and parentheses. Whitespace (including newlines) is ignored.
RatPoly parse_poly(std::string_view text);

}  // namespace confcoh

#endif
