#pragma once

#include <string>

#include "eps/frontend/problem.hpp"
#include "eps/lang/clause.hpp"

namespace testutil {

// B(y, x, X) = not y < x or y in X
inline eps::InductiveClause all_below() {
  using namespace eps;
  return InductiveClause(disj(neg(lt(var(0), var(1))), in_i(var(0))));
}

inline const char* kAllBelow = "(clause (y x) (or (not (< y x)) (in y X)))\n";
inline const char* kPred = "(clause (y x) (or (not (= (s y) x)) (in y X)))\n";

inline eps::CanonicalExpression in(int n) { return eps::canon_form(n); }

inline eps::CanonicalExpression cw(const eps::InductiveClause& b, int n) {
  return eps::CanonicalExpression(b.witness_term(eps::num(n)));
}

inline std::string problem_path(const std::string& name) {
  return std::string(EPS_PROBLEMS_DIR) + "/" + name + ".eps";
}

}  // namespace testutil
