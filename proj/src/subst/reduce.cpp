#include "eps/subst/reduce.hpp"

#include <algorithm>

namespace eps {

namespace {

bool all_numerals(const std::vector<Expression>& xs) {
  return std::all_of(xs.begin(), xs.end(), [](const Expression& x) { return x.is_numeral(); });
}

bool same_nodes(const std::vector<Expression>& xs, std::span<const Expression> ys) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (xs[i].raw() != ys[i].raw()) return false;
  return true;
}

Expression rebuild(const Expression& e, std::vector<Expression> kids) {
  return same_nodes(kids, e.children()) ? e : with_children(e, std::move(kids));
}

}  // namespace

Expression reduce_term(const Expression& t, const EpsilonSubstitution& s) {
  switch (t.kind()) {
    case Kind::Numeral:
    case Kind::Var:
      return t;
    case Kind::Succ: {
      Expression a = reduce_term(t.child(0), s);
      return succ(a);
    }
    case Kind::Add:
    case Kind::Mul: {
      Expression a = reduce_term(t.child(0), s);
      Expression b = reduce_term(t.child(1), s);
      if (a.is_numeral() && b.is_numeral())
        return num(t.kind() == Kind::Add ? Natural(a.numeral() + b.numeral())
                                         : Natural(a.numeral() * b.numeral()));
      return rebuild(t, {a, b});
    }
    case Kind::Skolem: {
      std::vector<Expression> args;
      args.reserve(t.children().size());
      for (const auto& a : t.children()) args.push_back(reduce_term(a, s));
      Expression c = rebuild(t, std::move(args));
      if (!all_numerals({c.children().begin(), c.children().end()})) return c;
      auto v = s.lookup(CanonicalExpression(c));
      if (!v) return c;
      if (v->is_unknown()) return num(0);
      if (v->is_num()) return num(v->n());
      throw SubstitutionError("term mapped to top: " + to_string(c));
    }
    default:
      throw ExprError("reduce_term: expected a term, got " + to_string(t));
  }
}

Expression reduce_formula(const Expression& phi, const EpsilonSubstitution& s) {
  switch (phi.kind()) {
    case Kind::Top:
    case Kind::Bottom:
      return phi;
    case Kind::Eq:
    case Kind::Lt:
      return rebuild(phi, {reduce_term(phi.child(0), s), reduce_term(phi.child(1), s)});
    case Kind::InI: {
      Expression t = reduce_term(phi.child(0), s);
      if (t.is_numeral()) {
        Expression atom = rebuild(phi, {t});
        if (auto v = s.lookup(CanonicalExpression(atom))) {
          if (v->is_top()) return top();
          if (v->is_unknown()) return bottom();
          throw SubstitutionError("formula mapped to a numeral: " + to_string(atom));
        }
        return atom;
      }
      return rebuild(phi, {t});
    }
    case Kind::Not:
      return rebuild(phi, {reduce_formula(phi.child(0), s)});
    case Kind::And:
    case Kind::Or:
      return rebuild(phi, {reduce_formula(phi.child(0), s), reduce_formula(phi.child(1), s)});
    default:
      throw ExprError("reduce_formula: expected a formula, got " + to_string(phi));
  }
}

bool is_pa_sentence(const Expression& phi) {
  switch (phi.kind()) {
    case Kind::Skolem:
    case Kind::InI:
    case Kind::Var:
      return false;
    default:
      return std::all_of(phi.children().begin(), phi.children().end(),
                         [](const Expression& k) { return is_pa_sentence(k); });
  }
}

namespace {

Natural eval_pa_term(const Expression& t) {
  switch (t.kind()) {
    case Kind::Numeral:
      return t.numeral();
    case Kind::Succ:
      return eval_pa_term(t.child(0)) + 1;
    case Kind::Add:
      return eval_pa_term(t.child(0)) + eval_pa_term(t.child(1));
    case Kind::Mul:
      return eval_pa_term(t.child(0)) * eval_pa_term(t.child(1));
    default:
      throw ExprError("not a closed PA term: " + to_string(t));
  }
}

}  // namespace

bool eval_pa(const Expression& phi) {
  switch (phi.kind()) {
    case Kind::Top:
      return true;
    case Kind::Bottom:
      return false;
    case Kind::Eq:
      return eval_pa_term(phi.child(0)) == eval_pa_term(phi.child(1));
    case Kind::Lt:
      return eval_pa_term(phi.child(0)) < eval_pa_term(phi.child(1));
    case Kind::Not:
      return !eval_pa(phi.child(0));
    case Kind::And:
      return eval_pa(phi.child(0)) && eval_pa(phi.child(1));
    case Kind::Or:
      return eval_pa(phi.child(0)) || eval_pa(phi.child(1));
    default:
      throw ExprError("not a PA sentence: " + to_string(phi));
  }
}

bool models(const EpsilonSubstitution& s, const Expression& phi) {
  Expression r = reduce_formula(phi, s);
  return is_pa_sentence(r) && eval_pa(r);
}

bool decides(const EpsilonSubstitution& s, const Expression& phi) {
  Expression r = reduce_formula(phi, s);
  return is_pa_sentence(r);
}

Expression correctness_formula(const CanonicalExpression& e, const Value& u,
                               const InductiveClause& clause) {
  if (u.is_unknown()) return top();
  if (e.is_formula()) {
    if (!u.is_top()) throw SubstitutionError("F(e,u): formula needs top or ?");
    return clause.a_formula(e.expr().child(0));
  }
  if (!u.is_num()) throw SubstitutionError("F(e,u): term needs a numeral or ?");
  if (u.n() > kMaxMinimalityWidth)
    throw SubstitutionError("F(e,u): value too large for the minimality conjunction");
  const SkolemSymbol& c = e.expr().symbol();
  auto args = e.args();
  Expression out = instantiate(c, num(u.n()), args);
  const auto width = static_cast<unsigned>(u.n());
  for (unsigned v = 0; v < width; ++v) out = conj(out, neg(instantiate(c, num(v), args)));
  return out;
}

bool is_correct(const EpsilonSubstitution& s, const InductiveClause& clause) {
  EpsilonSubstitution ext = s.extended();
  for (const auto& [e, u] : s)
    if (!models(ext, correctness_formula(e, u, clause))) return false;
  return true;
}

std::vector<CanonicalExpression> incorrect_entries(const EpsilonSubstitution& s,
                                                   const InductiveClause& clause) {
  std::vector<CanonicalExpression> out;
  EpsilonSubstitution ext = s.extended();
  for (const auto& [e, u] : s)
    if (!models(ext, correctness_formula(e, u, clause))) out.push_back(e);
  return out;
}

bool is_cc(const EpsilonSubstitution& s, const InductiveClause& clause) {
  EpsilonSubstitution st = s.strict();
  for (const auto& [e, u] : s) {
    if (models(st, neg(correctness_formula(e, u, clause)))) return false;
    if (e.is_clause_witness() && u.is_num()) {
      const Value* f = s.find(canon_form(e.numeral_arg()));
      if (f != nullptr && f->is_top()) return false;
    }
  }
  return true;
}

bool is_computing(const EpsilonSubstitution& s, const InductiveClause& clause) {
  EpsilonSubstitution st = s.strict();
  for (const auto& [e, u] : s)
    if (!decides(st, correctness_formula(e, u, clause))) return false;
  return true;
}

}  // namespace eps
