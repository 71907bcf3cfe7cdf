#ifndef DERHAM_PARSE_HPP
#define DERHAM_PARSE_HPP

#include <stdexcept>
#include <string>

#include "derham/poly.hpp"

namespace derham {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

/// Variables are x1..x9; when nvars <= 3 the aliases x, y, z are accepted.
/// Grammar: rational literals p/q, operators + - * ^, parentheses, unary
/// minus; ^ binds tighter than *, which binds tighter than +/-.
Poly parse_poly(const std::string& text, int nvars);

/// Canonical printing: graded-lex term order, explicit '*', no redundant
/// parentheses. parse(print(p)) == p.
std::string to_string(const Poly& p);

/// Printable name of variable i (0-based): "x","y","z" for nvars <= 3,
/// otherwise "x1".."x9".
std::string var_name(int nvars, int i);

} // namespace derham

#endif
