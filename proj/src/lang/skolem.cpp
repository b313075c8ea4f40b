#include "eps/lang/skolem.hpp"

#include <algorithm>
#include <array>

namespace eps {

namespace {

struct Abstractor {
  std::uint32_t x;
  std::vector<Expression> params;

  Expression param_for(const Expression& t) {
    auto it = std::find(params.begin(), params.end(), t);
    std::size_t i = static_cast<std::size_t>(it - params.begin());
    if (it == params.end()) params.push_back(t);
    return var(static_cast<std::uint32_t>(i + 1));
  }

  Expression walk(const Expression& e) {
    if (e.is_term()) {
      if (e.kind() == Kind::Var) return e.var() == x ? var(0) : param_for(e);
      if (is_closed(e)) return param_for(e);
    }
    if (e.children().empty()) return e;
    std::vector<Expression> kids;
    kids.reserve(e.children().size());
    for (const auto& k : e.children()) kids.push_back(walk(k));
    return with_children(e, std::move(kids));
  }
};

bool match_into(const Expression& p, std::uint32_t hole, const Expression& e,
                Expression& binding) {
  if (p.kind() == Kind::Var && p.var() == hole) {
    if (!e.is_term()) return false;
    if (binding.null()) {
      binding = e;
      return true;
    }
    return binding == e;
  }
  // succ folds S(n) into a numeral, so S(p) may face a numeral
  if (p.kind() == Kind::Succ && e.is_numeral())
    return e.numeral() > 0 && match_into(p.child(0), hole, num(e.numeral() - 1), binding);
  if (p.kind() != e.kind()) return false;
  switch (p.kind()) {
    case Kind::Numeral:
      return p.numeral() == e.numeral();
    case Kind::Var:
      return p.var() == e.var();
    case Kind::Skolem:
      if (!(p.symbol() == e.symbol())) return false;
      break;
    default:
      break;
  }
  auto pk = p.children();
  auto ek = e.children();
  if (pk.size() != ek.size()) return false;
  for (std::size_t i = 0; i < pk.size(); ++i)
    if (!match_into(pk[i], hole, ek[i], binding)) return false;
  return true;
}

}  // namespace

Abstraction abstract_closed_terms(const Expression& phi, std::uint32_t x) {
  if (!phi.is_formula()) throw ExprError("abstract_closed_terms: expected a formula");
  Abstractor a{x, {}};
  Expression index = a.walk(phi);
  auto arity = static_cast<std::uint32_t>(a.params.size());
  return Abstraction{SkolemSymbol(std::move(index), arity), std::move(a.params)};
}

bool contains_var(const Expression& e, std::uint32_t v) {
  if (e.kind() == Kind::Var) return e.var() == v;
  return std::any_of(e.children().begin(), e.children().end(),
                     [v](const Expression& k) { return contains_var(k, v); });
}

std::optional<Expression> match_hole(const Expression& pattern, std::uint32_t hole,
                                     const Expression& e) {
  Expression binding;
  if (!match_into(pattern, hole, e, binding)) return std::nullopt;
  return binding;
}

Expression skolem_term_for(const Expression& body, std::uint32_t x,
                           const InductiveClause* clause) {
  if (clause != nullptr) {
    Expression pattern = neg(clause->instance(var(x), var(kHole)));
    if (auto t = match_hole(pattern, kHole, body); t && !t->null() && !contains_var(*t, x))
      return clause->witness_term(*t);
  }
  Abstraction abs = abstract_closed_terms(body, x);
  return skolem(abs.symbol, std::move(abs.args));
}

Expression expand_quantifier(const Quantified& q, const InductiveClause* clause) {
  if (q.body.null() || !q.body.is_formula()) throw ExprError("quantifier body must be a formula");
  Expression witness_of = q.universal ? neg(q.body) : q.body;
  Expression c = skolem_term_for(witness_of, q.bound, clause);
  std::vector<Expression> vals(q.bound + 1);
  vals[q.bound] = c;
  return substitute(q.body, vals);
}

}  // namespace eps
