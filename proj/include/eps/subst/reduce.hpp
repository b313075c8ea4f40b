#pragma once

#include "eps/lang/clause.hpp"
#include "eps/lang/expr.hpp"
#include "eps/subst/substitution.hpp"

namespace eps {

// |t|_S. Canonical Skolem terms go through S (? -> 0); other Skolem terms and
// PA applications reduce their arguments first and compute when those became
// numerals. Open terms are allowed; variables stay in place.
Expression reduce_term(const Expression& t, const EpsilonSubstitution& s);

// |phi|_S. Homomorphic on connectives and relation atoms; `n in I` becomes top
// or bottom when S assigns it top or ?, and stays otherwise.
Expression reduce_formula(const Expression& phi, const EpsilonSubstitution& s);

// A closed formula built only from PA atoms over numerals, connectives and
// top/bottom.
bool is_pa_sentence(const Expression& phi);
// Truth in the standard model; requires is_pa_sentence.
bool eval_pa(const Expression& phi);

// S |= phi
bool models(const EpsilonSubstitution& s, const Expression& phi);
// S |= phi or S |= not phi
bool decides(const EpsilonSubstitution& s, const Expression& phi);

// The correctness formula F(e, u).
Expression correctness_formula(const CanonicalExpression& e, const Value& u,
                               const InductiveClause& clause);

// Largest value for which the minimality conjunction is built.
inline constexpr unsigned kMaxMinimalityWidth = 1u << 20;

bool is_correct(const EpsilonSubstitution& s, const InductiveClause& clause);
bool is_cc(const EpsilonSubstitution& s, const InductiveClause& clause);
inline bool is_ci(const EpsilonSubstitution& s, const InductiveClause& clause) {
  return !is_cc(s, clause);
}
bool is_computing(const EpsilonSubstitution& s, const InductiveClause& clause);

// Entries violating correctness, for diagnostics.
std::vector<CanonicalExpression> incorrect_entries(const EpsilonSubstitution& s,
                                                   const InductiveClause& clause);

}  // namespace eps
