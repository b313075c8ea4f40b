#pragma once

#include "eps/lang/expr.hpp"

namespace eps {

// The inductive clause B(y, x, X) with A(x, X) = forall y B(y, x, X).
// The stored body uses %0 for the bound variable y, %1 for the element x, and
// I atoms for the set placeholder X.
class InductiveClause {
 public:
  // B = bottom, i.e. the empty inductive set.
  InductiveClause();
  explicit InductiveClause(Expression body);

  const Expression& body() const { return body_; }
  // c_{exists x. not B(x, y, I)}
  const SkolemSymbol& witness() const { return witness_; }

  // c_n
  Expression witness_term(Expression n) const;
  // B(bound, elem, I)
  Expression instance(const Expression& bound, const Expression& elem) const;
  // B(bound, elem, X := {z | set(z)}); `set` is open in %0.
  Expression instance_on(const Expression& bound, const Expression& elem,
                         const Expression& set) const;
  // A(t, I) = B(c_t, t, I)
  Expression a_formula(const Expression& t) const;

  friend bool operator==(const InductiveClause& a, const InductiveClause& b) {
    return a.body_ == b.body_;
  }

 private:
  Expression body_;
  SkolemSymbol witness_;
};

// True when every I atom (standing for X) occurs under an even number of
// negations.
bool occurs_positively(const Expression& body);

// Replaces every I atom `t in I` of f by set(t), where `set` is open in %0.
Expression replace_set(const Expression& f, const Expression& set);

}  // namespace eps
