#include "eps/lang/sexpr.hpp"

#include <cctype>
#include <sstream>

namespace eps {

SyntaxError::SyntaxError(const std::string& msg, std::size_t line, std::size_t col)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
      line_(line),
      col_(col) {}

std::string SExpr::where() const { return std::to_string(line) + ":" + std::to_string(col); }

std::string SExpr::str() const {
  if (!is_list) return atom;
  std::string out = "(";
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i) out += ' ';
    out += list[i].str();
  }
  return out + ")";
}

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  bool at_end() {
    skip();
    return pos_ >= text_.size();
  }

  SExpr read() {
    skip();
    if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", line_, col_);
    SExpr out;
    out.line = line_;
    out.col = col_;
    char c = text_[pos_];
    if (c == ')') throw SyntaxError("unexpected ')'", line_, col_);
    if (c == '(') {
      advance();
      out.is_list = true;
      for (;;) {
        skip();
        if (pos_ >= text_.size()) throw SyntaxError("unterminated list", out.line, out.col);
        if (text_[pos_] == ')') {
          advance();
          break;
        }
        out.list.push_back(read());
      }
      return out;
    }
    while (pos_ < text_.size()) {
      char d = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(d)) || d == '(' || d == ')' || d == ';') break;
      out.atom += d;
      advance();
    }
    return out;
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

[[noreturn]] void fail(const SExpr& s, const std::string& msg) {
  throw SyntaxError(msg + ": " + s.str(), s.line, s.col);
}

void arity(const SExpr& s, std::size_t n) {
  if (s.list.size() != n) fail(s, "wrong number of arguments");
}

Expression read_term(const SExpr& s) {
  Expression e = read_expression(s);
  if (!e.is_term()) fail(s, "expected a term");
  return e;
}

Expression read_formula(const SExpr& s) {
  Expression e = read_expression(s);
  if (!e.is_formula()) fail(s, "expected a formula");
  return e;
}

}  // namespace

std::vector<SExpr> read_sexprs(std::string_view text) {
  Reader r(text);
  std::vector<SExpr> out;
  while (!r.at_end()) out.push_back(r.read());
  return out;
}

SExpr read_sexpr(std::string_view text) {
  Reader r(text);
  SExpr s = r.read();
  if (!r.at_end()) throw SyntaxError("trailing input after expression", 1, 1);
  return s;
}

bool is_natural_literal(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Expression read_expression(const SExpr& s) {
  try {
    if (s.is_atom()) {
      if (is_natural_literal(s.atom)) return num(Natural(s.atom));
      if (s.atom == "top") return top();
      if (s.atom == "bot") return bottom();
      if (s.atom.size() > 1 && s.atom[0] == '%' && is_natural_literal(s.atom.substr(1)))
        return var(static_cast<std::uint32_t>(std::stoul(s.atom.substr(1))));
      fail(s, "unknown atom");
    }
    if (s.list.empty() || !s.list[0].is_atom()) fail(s, "expected an operator");
    const std::string& op = s.list[0].atom;
    if (op == "s") {
      arity(s, 2);
      return succ(read_term(s.list[1]));
    }
    if (op == "+" || op == "*") {
      arity(s, 3);
      auto a = read_term(s.list[1]);
      auto b = read_term(s.list[2]);
      return op == "+" ? add(a, b) : mul(a, b);
    }
    if (op == "c") {
      if (s.list.size() < 3 || !is_natural_literal(s.list[1].atom)) fail(s, "malformed Skolem term");
      auto k = static_cast<std::uint32_t>(std::stoul(s.list[1].atom));
      if (s.list.size() != 3 + k) fail(s, "Skolem arity mismatch");
      SkolemSymbol c(read_formula(s.list[2]), k);
      std::vector<Expression> args;
      for (std::size_t i = 3; i < s.list.size(); ++i) args.push_back(read_term(s.list[i]));
      return skolem(c, std::move(args));
    }
    if (op == "cI") {
      arity(s, 3);
      SkolemSymbol c(read_formula(s.list[1]), 1, true);
      return skolem(c, {read_term(s.list[2])});
    }
    if (op == "=" || op == "<") {
      arity(s, 3);
      auto a = read_term(s.list[1]);
      auto b = read_term(s.list[2]);
      return op == "=" ? eq(a, b) : lt(a, b);
    }
    if (op == "in") {
      arity(s, 3);
      if (!s.list[2].is("I")) fail(s, "membership must be in I");
      return in_i(read_term(s.list[1]));
    }
    if (op == "not") {
      arity(s, 2);
      return neg(read_formula(s.list[1]));
    }
    if (op == "and" || op == "or") {
      arity(s, 3);
      auto a = read_formula(s.list[1]);
      auto b = read_formula(s.list[2]);
      return op == "and" ? conj(a, b) : disj(a, b);
    }
    fail(s, "unknown operator '" + op + "'");
  } catch (const ExprError& e) {
    fail(s, e.what());
  }
}

Expression parse_expression(std::string_view text) { return read_expression(read_sexpr(text)); }

}  // namespace eps
