#pragma once

// Expressions of the Skolemized language: terms and quantifier-free formulas
// over the PA signature {0, S, +, *; =, <} extended by the membership
// predicate I and Skolem function symbols.
//
// Expressions are immutable, reference-counted trees with a structural hash
// computed at construction. They are safe to share between threads.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace eps {

using Natural = boost::multiprecision::cpp_int;

enum class Kind : std::uint8_t {
  // terms
  Numeral,
  Var,
  Succ,
  Add,
  Mul,
  Skolem,
  // formulas
  Eq,
  Lt,
  InI,
  Not,
  And,
  Or,
  Top,
  Bottom,
};

bool is_term_kind(Kind k);

class SkolemSymbol;
struct Node;

class Expression {
 public:
  Expression() = default;  // null; only valid as a placeholder
  explicit Expression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  Kind kind() const;
  bool is_term() const { return is_term_kind(kind()); }
  bool is_formula() const { return !is_term(); }
  bool is_numeral() const { return kind() == Kind::Numeral; }
  bool null() const { return node_ == nullptr; }

  const Natural& numeral() const;
  std::uint32_t var() const;
  const SkolemSymbol& symbol() const;
  std::span<const Expression> children() const;
  const Expression& child(std::size_t i) const { return children()[i]; }
  std::size_t hash() const;

  // Lexicographic structural order (hash first, so it is cheap but arbitrary).
  friend int compare(const Expression& a, const Expression& b);
  friend bool operator==(const Expression& a, const Expression& b);
  friend bool operator<(const Expression& a, const Expression& b) {
    return compare(a, b) < 0;
  }

  const Node* raw() const { return node_.get(); }

 private:
  std::shared_ptr<const Node> node_;
};

// A Skolem function symbol c_{exists x. phi(x, y1..yk)}. The index formula uses
// canonical variables: %0 is the distinguished variable, %1..%k the
// parameters. The clause witness c_{exists x. not B(x, y, I)} is flagged so
// that its rank can be read off the symbol alone.
class SkolemSymbol {
 public:
  SkolemSymbol(Expression index, std::uint32_t arity, bool clause_witness = false);

  const Expression& index() const { return data_->index; }
  std::uint32_t arity() const { return data_->arity; }
  bool clause_witness() const { return data_->clause_witness; }
  // 1 + max level of symbols occurring in the index formula.
  std::uint32_t level() const { return data_->level; }
  // Whether I occurs in the index formula, directly or through a nested symbol.
  bool mentions_i() const { return data_->mentions_i; }
  std::size_t hash() const { return data_->hash; }

  friend int compare(const SkolemSymbol& a, const SkolemSymbol& b);
  friend bool operator==(const SkolemSymbol& a, const SkolemSymbol& b) {
    return compare(a, b) == 0;
  }

 private:
  struct Data {
    Expression index;
    std::uint32_t arity;
    bool clause_witness;
    std::uint32_t level;
    bool mentions_i;
    std::size_t hash;
  };
  std::shared_ptr<const Data> data_;
};

struct Node {
  Kind kind;
  Natural num;
  std::uint32_t var = 0;
  std::shared_ptr<const SkolemSymbol> sym;
  std::vector<Expression> kids;
  std::size_t hash = 0;
};

class ExprError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Constructors. succ() normalizes S(n) to the numeral n+1.
Expression num(Natural n);
Expression var(std::uint32_t index);
Expression succ(Expression t);
Expression add(Expression a, Expression b);
Expression mul(Expression a, Expression b);
Expression skolem(const SkolemSymbol& c, std::vector<Expression> args);
Expression eq(Expression a, Expression b);
Expression lt(Expression a, Expression b);
Expression in_i(Expression t);
Expression neg(Expression f);
Expression conj(Expression a, Expression b);
Expression disj(Expression a, Expression b);
Expression implies(Expression a, Expression b);  // sugar for (not a) or b
Expression top();
Expression bottom();

// Rebuilds a node of the same kind with new children.
Expression with_children(const Expression& e, std::vector<Expression> kids);

// Replaces variables: var(i) -> values[i] when i < values.size() and
// values[i] is non-null. Does not descend into Skolem index formulas, which
// have their own variable scope.
Expression substitute(const Expression& e, std::span<const Expression> values);

// Instantiates a symbol's index formula phi(x, y) with x := value, y := args.
Expression instantiate(const SkolemSymbol& c, const Expression& value,
                       std::span<const Expression> args);

bool is_closed(const Expression& e);        // no variables outside index formulas
bool has_skolem(const Expression& e);       // any Skolem term
bool mentions_i(const Expression& e);       // any I atom, including via symbols
bool has_i_atom(const Expression& e);       // any I atom outside index formulas
std::uint32_t max_var_plus_one(const Expression& e);

std::string to_string(const Expression& e);
std::string to_string(const SkolemSymbol& c);

}  // namespace eps

template <>
struct std::hash<eps::Expression> {
  std::size_t operator()(const eps::Expression& e) const { return e.hash(); }
};
