#include "eps/hproc/critical.hpp"

#include <array>

#include "eps/lang/skolem.hpp"

namespace eps {

namespace {

void require_closed_term(const Expression& t, const char* what) {
  if (t.null() || !t.is_term() || !is_closed(t))
    throw ExprError(std::string(what) + " must be a closed term");
}

void require_open_formula(const Expression& phi, const char* what) {
  if (phi.null() || !phi.is_formula() || max_var_plus_one(phi) > 1)
    throw ExprError(std::string(what) + " must be a formula in one variable");
}

}  // namespace

const char* crit_kind_name(CritKind k) {
  switch (k) {
    case CritKind::Pred:
      return "pred";
    case CritKind::Epsilon:
      return "eps";
    case CritKind::Induction:
      return "ind";
    case CritKind::InductiveDef:
      return "inddef";
    case CritKind::Closure:
      return "closure";
  }
  return "?";
}

Expression apply_open(const Expression& phi, const Expression& t) {
  std::array<Expression, 1> vals{t};
  return substitute(phi, vals);
}

CriticalFormula make_pred(Expression s, const InductiveClause& clause) {
  require_closed_term(s, "pred: s");
  CriticalFormula cr{CritKind::Pred, {}, s, {}, {}, {}, {}, {}, {}};
  Expression body = eq(s, succ(var(0)));
  cr.witness = skolem_term_for(body, 0, &clause);
  cr.formula = implies(neg(eq(s, num(0))), apply_open(body, cr.witness));
  return cr;
}

CriticalFormula make_epsilon(Expression phi, Expression t, const InductiveClause& clause) {
  require_open_formula(phi, "eps: phi");
  require_closed_term(t, "eps: t");
  CriticalFormula cr{CritKind::Epsilon, {}, {}, t, phi, {}, {}, {}, {}};
  cr.witness = skolem_term_for(phi, 0, &clause);
  cr.formula = implies(apply_open(phi, t), apply_open(phi, cr.witness));
  return cr;
}

CriticalFormula make_induction(Expression phi, Expression t, const InductiveClause& clause) {
  require_open_formula(phi, "ind: phi");
  require_closed_term(t, "ind: t");
  CriticalFormula cr{CritKind::Induction, {}, {}, t, phi, {}, {}, {}, {}};
  Expression body = conj(phi, neg(apply_open(phi, succ(var(0)))));
  cr.witness = skolem_term_for(body, 0, &clause);
  cr.formula = implies(conj(apply_open(phi, num(0)), neg(apply_open(phi, t))),
                       apply_open(body, cr.witness));
  return cr;
}

CriticalFormula make_inductive_def(Expression t, const InductiveClause& clause) {
  require_closed_term(t, "inddef: t");
  CriticalFormula cr{CritKind::InductiveDef, {}, {}, t, {}, {}, {}, {}, {}};
  cr.formula = implies(clause.a_formula(t), in_i(t));
  return cr;
}

CriticalFormula make_closure(Expression phi, const InductiveClause& clause) {
  require_open_formula(phi, "closure: phi");
  CriticalFormula cr{CritKind::Closure, {}, {}, {}, phi, {}, {}, {}, {}};
  // A(x, phi) = forall z B(z, x, phi) with z = %1, x = %0
  Expression b = clause.instance_on(var(1), var(0), phi);
  cr.closure_d = skolem_term_for(neg(b), 1, &clause);
  std::array<Expression, 2> at_d{Expression(), cr.closure_d};
  cr.closure_a = substitute(b, at_d);

  Expression premise = implies(cr.closure_a, phi);
  cr.witness = skolem_term_for(neg(premise), 0, &clause);
  Expression conclusion = implies(in_i(var(0)), phi);
  cr.closure_k = skolem_term_for(neg(conclusion), 0, &clause);
  cr.formula = implies(apply_open(premise, cr.witness), apply_open(conclusion, cr.closure_k));
  return cr;
}

std::string describe(const CriticalFormula& cr) {
  std::string out = std::string(crit_kind_name(cr.kind)) + " ";
  switch (cr.kind) {
    case CritKind::Pred:
      return out + to_string(cr.s);
    case CritKind::Epsilon:
    case CritKind::Induction:
      return out + to_string(cr.t) + " " + to_string(cr.phi);
    case CritKind::InductiveDef:
      return out + to_string(cr.t);
    case CritKind::Closure:
      return out + to_string(cr.phi);
  }
  return out;
}

}  // namespace eps
