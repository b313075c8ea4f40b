#pragma once

#include <string>
#include <vector>

#include "eps/lang/clause.hpp"
#include "eps/lang/expr.hpp"

namespace eps {

enum class CritKind { Pred, Epsilon, Induction, InductiveDef, Closure };

const char* crit_kind_name(CritKind k);

// A closed critical formula together with the components of its axiom shape.
// Open components use %0 for the distinguished variable and are otherwise
// closed.
struct CriticalFormula {
  CritKind kind;
  Expression formula;  // the Skolemized closed formula

  Expression s;    // Pred: not s = 0 -> exists x. s = Sx
  Expression t;    // Epsilon, Induction, InductiveDef
  Expression phi;  // Epsilon, Induction, Closure (open in %0)

  // Skolem term of the existential conclusion (Pred, Epsilon, Induction) or
  // of the antecedent forall x (A(x, phi) -> phi(x)) for Closure.
  Expression witness;

  // Closure only: A(x, phi) and its inner Skolem term, both open in %0, and
  // the Skolem term of the conclusion forall x (x in I -> phi(x)).
  Expression closure_a;
  Expression closure_d;
  Expression closure_k;

  friend bool operator==(const CriticalFormula& a, const CriticalFormula& b) {
    return a.kind == b.kind && a.formula == b.formula;
  }
};

CriticalFormula make_pred(Expression s, const InductiveClause& clause);
CriticalFormula make_epsilon(Expression phi, Expression t, const InductiveClause& clause);
CriticalFormula make_induction(Expression phi, Expression t, const InductiveClause& clause);
CriticalFormula make_inductive_def(Expression t, const InductiveClause& clause);
CriticalFormula make_closure(Expression phi, const InductiveClause& clause);

// phi(t) for phi open in %0.
Expression apply_open(const Expression& phi, const Expression& t);

std::string describe(const CriticalFormula& cr);

}  // namespace eps
