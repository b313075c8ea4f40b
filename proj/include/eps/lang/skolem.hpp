#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "eps/lang/clause.hpp"
#include "eps/lang/expr.hpp"

namespace eps {

// A variable index reserved for pattern holes.
inline constexpr std::uint32_t kHole = 0xfffffff0u;

struct Abstraction {
  SkolemSymbol symbol;
  std::vector<Expression> args;  // closed terms and free variables, in parameter order
};

// Turns phi(x, ...) into a simple index formula: the distinguished variable
// becomes %0 and every maximal closed subterm or other free variable becomes
// a parameter %1..%k, numbered by first occurrence (left to right, pre-order).
// Identical subterms share a parameter.
Abstraction abstract_closed_terms(const Expression& phi, std::uint32_t x);

// A quantified formula over a quantifier-free body. `bound` names the bound
// variable inside `body`.
struct Quantified {
  bool universal = false;
  std::uint32_t bound = 0;
  Expression body;
};

// Skolem term for exists x. body. When `clause` is given and body is an
// instance not B(x, t, I) of the inductive clause, the clause witness c_t is
// used instead of a fresh abstraction.
Expression skolem_term_for(const Expression& body, std::uint32_t x,
                           const InductiveClause* clause = nullptr);

// exists x. phi  ->  phi(c_{exists x phi}(t), t)
// forall x. phi  ->  phi(c_{exists x not phi}(t), t)
Expression expand_quantifier(const Quantified& q, const InductiveClause* clause = nullptr);

// Matches `pattern` against `e`, binding the variable `hole` in the pattern.
// Other pattern variables must match identically. Returns the binding, or the
// null expression when the hole does not occur; nullopt on mismatch.
std::optional<Expression> match_hole(const Expression& pattern, std::uint32_t hole,
                                     const Expression& e);

bool contains_var(const Expression& e, std::uint32_t v);

}  // namespace eps
