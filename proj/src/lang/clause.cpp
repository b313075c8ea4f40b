#include "eps/lang/clause.hpp"

#include <array>
#include <vector>

namespace eps {

namespace {

bool positive_in(const Expression& f, bool positive) {
  switch (f.kind()) {
    case Kind::InI:
      return positive;
    case Kind::Not:
      return positive_in(f.child(0), !positive);
    case Kind::And:
    case Kind::Or:
      return positive_in(f.child(0), positive) && positive_in(f.child(1), positive);
    default:
      return true;
  }
}

}  // namespace

InductiveClause::InductiveClause() : InductiveClause(bottom()) {}

InductiveClause::InductiveClause(Expression body)
    : body_(std::move(body)), witness_(neg(body_), 1, true) {
  if (!body_.is_formula()) throw ExprError("inductive clause must be a formula");
  if (max_var_plus_one(body_) > 2) throw ExprError("inductive clause has more than two variables");
  if (has_skolem(body_)) throw ExprError("inductive clause must not contain Skolem terms");
  if (!occurs_positively(body_)) throw ExprError("set variable must occur positively in clause");
}

Expression InductiveClause::witness_term(Expression n) const {
  return skolem(witness_, {std::move(n)});
}

Expression InductiveClause::instance(const Expression& bound, const Expression& elem) const {
  std::array<Expression, 2> vals{bound, elem};
  return substitute(body_, vals);
}

Expression InductiveClause::instance_on(const Expression& bound, const Expression& elem,
                                        const Expression& set) const {
  // replace the set first: the instantiated arguments may mention I themselves
  Expression b = replace_set(body_, set);
  std::array<Expression, 2> vals{bound, elem};
  return substitute(b, vals);
}

Expression InductiveClause::a_formula(const Expression& t) const {
  return instance(witness_term(t), t);
}

bool occurs_positively(const Expression& body) { return positive_in(body, true); }

Expression replace_set(const Expression& f, const Expression& set) {
  if (f.kind() == Kind::InI) {
    std::array<Expression, 1> vals{f.child(0)};
    return substitute(set, vals);
  }
  if (f.is_term() || f.children().empty()) return f;
  std::vector<Expression> kids;
  for (const auto& k : f.children()) kids.push_back(replace_set(k, set));
  return with_children(f, std::move(kids));
}

}  // namespace eps
