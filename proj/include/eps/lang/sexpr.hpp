#pragma once

// Minimal s-expression reader shared by the problem and trace formats.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eps/lang/expr.hpp"

namespace eps {

struct SExpr {
  std::string atom;  // empty for lists
  std::vector<SExpr> list;
  bool is_list = false;
  std::size_t line = 1;
  std::size_t col = 1;

  bool is_atom() const { return !is_list; }
  bool is(std::string_view a) const { return !is_list && atom == a; }
  std::string where() const;
  std::string str() const;
};

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& msg, std::size_t line, std::size_t col);
  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t line_;
  std::size_t col_;
};

// Reads every top-level form. ';' starts a comment running to end of line.
std::vector<SExpr> read_sexprs(std::string_view text);
SExpr read_sexpr(std::string_view text);

bool is_natural_literal(std::string_view s);

// Reads the canonical serialization produced by to_string(Expression):
//   term    := numeral | %k | (s t) | (+ t t) | (* t t)
//            | (c k FORMULA t1 .. tk) | (cI FORMULA t)
//   formula := (= t t) | (< t t) | (in t I) | (not f) | (and f f) | (or f f)
//            | top | bot
// The clause witness form (cI ...) carries the negated clause as its index.
Expression read_expression(const SExpr& s);
Expression parse_expression(std::string_view text);

}  // namespace eps
