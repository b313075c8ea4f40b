#include "eps/frontend/problem.hpp"

#include <array>
#include <fstream>
#include <limits>
#include <sstream>

#include "eps/lang/skolem.hpp"

namespace eps {

namespace {

[[noreturn]] void fail(const SExpr& s, const std::string& msg) {
  throw SyntaxError(msg, s.line, s.col);
}

void arity(const SExpr& s, std::size_t n) {
  if (s.list.size() != n)
    fail(s, "'" + s.list[0].atom + "' takes " + std::to_string(n - 1) + " argument(s)");
}

const std::string& name_of(const SExpr& s) {
  if (!s.is_atom() || s.atom.empty() || is_natural_literal(s.atom))
    fail(s, "expected a variable name");
  return s.atom;
}

using Env = std::map<std::string, std::uint32_t>;

// Surface syntax to expressions. Binders get fresh variable indices and are
// Skolemized on the way out.
class Converter {
 public:
  Converter(const InductiveClause* clause, bool in_clause, std::uint32_t next)
      : clause_(clause), in_clause_(in_clause), next_(next) {}

  Expression term(const SExpr& s, const Env& env) {
    if (s.is_atom()) {
      if (is_natural_literal(s.atom)) return num(Natural(s.atom));
      if (auto it = env.find(s.atom); it != env.end()) return var(it->second);
      fail(s, "unbound variable '" + s.atom + "'");
    }
    const std::string& op = head(s);
    if (op == "s") {
      arity(s, 2);
      return succ(term(s.list[1], env));
    }
    if (op == "+" || op == "*") {
      arity(s, 3);
      Expression a = term(s.list[1], env);
      Expression b = term(s.list[2], env);
      return op == "+" ? add(a, b) : mul(a, b);
    }
    if (op == "some") {
      arity(s, 3);
      no_clause(s);
      auto [b, inner] = bind(s.list[1], env);
      return skolem_term_for(formula(s.list[2], inner), b, clause_);
    }
    if (op == "c" || op == "cI") {
      no_clause(s);
      std::size_t first = op == "c" ? 3 : 2;
      if (s.list.size() < first) fail(s, "malformed Skolem term");
      // the index formula has its own variable scope
      SExpr shell = s;
      std::vector<Expression> args;
      for (std::size_t i = first; i < s.list.size(); ++i) {
        args.push_back(term(s.list[i], env));
        shell.list[i] = SExpr{"0", {}, false, s.list[i].line, s.list[i].col};
      }
      Expression proto = read_expression(shell);
      return skolem(proto.symbol(), std::move(args));
    }
    fail(s, "unknown term operator '" + op + "'");
  }

  Expression formula(const SExpr& s, const Env& env) {
    if (s.is_atom()) {
      if (s.atom == "top") return top();
      if (s.atom == "bot") return bottom();
      fail(s, "expected a formula, got '" + s.atom + "'");
    }
    const std::string& op = head(s);
    if (op == "=" || op == "<") {
      arity(s, 3);
      Expression a = term(s.list[1], env);
      Expression b = term(s.list[2], env);
      return op == "=" ? eq(a, b) : lt(a, b);
    }
    if (op == "in") {
      arity(s, 3);
      const SExpr& set = s.list[2];
      const char* want = in_clause_ ? "X" : "I";
      if (!set.is(want)) fail(set, std::string("expected the set ") + want);
      return in_i(term(s.list[1], env));
    }
    if (op == "not") {
      arity(s, 2);
      return neg(formula(s.list[1], env));
    }
    if (op == "and" || op == "or") {
      if (s.list.size() < 3) fail(s, "'" + op + "' needs at least two operands");
      Expression out = formula(s.list.back(), env);
      for (std::size_t i = s.list.size() - 1; i-- > 1;) {
        Expression a = formula(s.list[i], env);
        out = op == "and" ? conj(a, out) : disj(a, out);
      }
      return out;
    }
    if (op == "->") {
      arity(s, 3);
      Expression a = formula(s.list[1], env);
      return implies(a, formula(s.list[2], env));
    }
    if (op == "exists" || op == "forall") {
      arity(s, 3);
      no_clause(s);
      auto [b, inner] = bind(s.list[1], env);
      Quantified q{op == "forall", b, formula(s.list[2], inner)};
      return expand_quantifier(q, clause_);
    }
    if (op == "A") {
      no_clause(s);
      if (s.list.size() == 2) return clause_->a_formula(term(s.list[1], env));
      arity(s, 4);
      Expression t = term(s.list[1], env);
      Expression set = set_formula(s.list[2], s.list[3]);
      std::uint32_t b = next_++;
      Quantified q{true, b, clause_->instance_on(var(b), t, set)};
      return expand_quantifier(q, clause_);
    }
    if (op == "B") {
      no_clause(s);
      if (s.list.size() == 3) return clause_->instance(term(s.list[1], env), term(s.list[2], env));
      arity(s, 5);
      Expression a = term(s.list[1], env);
      Expression t = term(s.list[2], env);
      return clause_->instance_on(a, t, set_formula(s.list[3], s.list[4]));
    }
    fail(s, "unknown formula operator '" + op + "'");
  }

 private:
  static const std::string& head(const SExpr& s) {
    if (s.list.empty() || !s.list[0].is_atom()) fail(s, "expected an operator");
    return s.list[0].atom;
  }

  void no_clause(const SExpr& s) const {
    if (in_clause_) fail(s, "the inductive clause must be quantifier-free and Skolem-free");
  }

  std::pair<std::uint32_t, Env> bind(const SExpr& name, const Env& env) {
    Env inner = env;
    std::uint32_t b = next_++;
    inner[name_of(name)] = b;
    return {b, inner};
  }

  // {z | phi} open in %0; may not mention outer variables.
  Expression set_formula(const SExpr& z, const SExpr& phi) {
    Converter sub(clause_, false, 1);
    Expression f = sub.formula(phi, Env{{name_of(z), 0}});
    if (max_var_plus_one(f) > 1) fail(phi, "set body may only mention its own variable");
    return f;
  }

  const InductiveClause* clause_;
  bool in_clause_;
  std::uint32_t next_;
};

Expression closed_term(const SExpr& s, const InductiveClause& clause) {
  Converter c(&clause, false, 0);
  Expression t = c.term(s, {});
  if (!is_closed(t)) fail(s, "term must be closed");
  return t;
}

Expression closed_formula(const SExpr& s, const InductiveClause& clause) {
  Converter c(&clause, false, 0);
  Expression f = c.formula(s, {});
  if (!is_closed(f)) fail(s, "critical formula must be closed");
  return f;
}

// (x PHI) or (exists x PHI), giving PHI open in %0.
Expression open_formula(const SExpr& s, const InductiveClause& clause, bool quantified) {
  if (!s.is_list) fail(s, "expected a bound formula");
  std::size_t off = quantified ? 1 : 0;
  if (s.list.size() != 2 + off || (quantified && !s.list[0].is("exists")))
    fail(s, quantified ? "expected (exists x PHI)" : "expected (x PHI)");
  Converter c(&clause, false, 1);
  Expression f = c.formula(s.list[1 + off], Env{{name_of(s.list[off]), 0}});
  if (max_var_plus_one(f) > 1) fail(s, "formula has free variables other than its own");
  return f;
}

Expression open_index(const Expression& w) {
  std::vector<Expression> args(w.children().begin(), w.children().end());
  return instantiate(w.symbol(), var(0), args);
}

// t with open(t) = inst, 0 when open does not use its variable, null on
// mismatch.
Expression hole_value(const Expression& open, const Expression& inst) {
  std::array<Expression, 1> hole{var(kHole)};
  auto t = match_hole(substitute(open, hole), kHole, inst);
  if (!t) return {};
  return t->null() ? num(0) : *t;
}

void closed_skolem_terms(const Expression& e, std::vector<Expression>& out) {
  if (e.kind() == Kind::Skolem && is_closed(e)) out.push_back(e);
  for (const auto& k : e.children()) closed_skolem_terms(k, out);
}

}  // namespace

std::uint64_t Problem::max_steps(std::uint64_t fallback) const {
  auto it = options.find("max-steps");
  return it == options.end() ? fallback : std::stoull(it->second);
}

bool operator==(const Problem& a, const Problem& b) {
  if (!(a.clause == b.clause) || a.crs != b.crs || a.options != b.options) return false;
  if (a.goals.size() != b.goals.size()) return false;
  for (std::size_t i = 0; i < a.goals.size(); ++i)
    if (!(a.goals[i].phi == b.goals[i].phi)) return false;
  return true;
}

CriticalFormula shape_check(const Expression& phi, const InductiveClause& clause) {
  if (!phi.is_formula() || !is_closed(phi)) throw ExprError("not a critical formula: not closed");
  auto matches = [&](const CriticalFormula& cr) { return cr.formula == phi; };
  auto attempt = [&](auto make) -> std::optional<CriticalFormula> {
    try {
      CriticalFormula cr = make();
      if (matches(cr)) return cr;
    } catch (const ExprError&) {
    }
    return std::nullopt;
  };

  if (phi.kind() == Kind::Or && phi.child(0).kind() == Kind::Not) {
    const Expression& ante = phi.child(0).child(0);
    const Expression& cons = phi.child(1);

    if (cons.kind() == Kind::InI)
      if (auto cr = attempt([&] { return make_inductive_def(cons.child(0), clause); })) return *cr;
    if (ante.kind() == Kind::Not && ante.child(0).kind() == Kind::Eq)
      if (auto cr = attempt([&] { return make_pred(ante.child(0).child(0), clause); })) return *cr;

    std::vector<Expression> ws;
    closed_skolem_terms(cons, ws);
    for (const auto& w : ws) {
      Expression body = open_index(w);
      // closure: the witness index is not (x in I -> phi(x))
      if (body.kind() == Kind::Not && body.child(0).kind() == Kind::Or &&
          body.child(0).child(0).kind() == Kind::Not)
        if (auto cr = attempt([&] { return make_closure(body.child(0).child(1), clause); }))
          return *cr;
      // induction: phi(x) and not phi(Sx)
      if (body.kind() == Kind::And && ante.kind() == Kind::And &&
          ante.child(1).kind() == Kind::Not) {
        Expression t = hole_value(body.child(0), ante.child(1).child(0));
        if (!t.null())
          if (auto cr = attempt([&] { return make_induction(body.child(0), t, clause); })) return *cr;
      }
      // epsilon: phi(t) -> phi(c)
      Expression t = hole_value(body, ante);
      if (!t.null())
        if (auto cr = attempt([&] { return make_epsilon(body, t, clause); })) return *cr;
    }
  }
  throw ExprError("not a critical formula");
}

Problem parse_problem(std::string_view text) {
  Problem p;
  bool seen_clause = false;
  bool seen_other = false;
  for (const SExpr& form : read_sexprs(text)) {
    if (!form.is_list || form.list.empty() || !form.list[0].is_atom())
      fail(form, "expected (clause ...), (crit ...), (goal ...) or (option ...)");
    const std::string& kw = form.list[0].atom;
    try {
      if (kw == "clause") {
        arity(form, 3);
        if (seen_clause) fail(form, "only one inductive clause is allowed");
        if (seen_other) fail(form, "the clause must come before critical formulas and goals");
        const SExpr& vars = form.list[1];
        if (!vars.is_list || vars.list.size() != 2) fail(vars, "expected (y x)");
        Env env{{name_of(vars.list[0]), 0}, {name_of(vars.list[1]), 1}};
        if (env.size() != 2) fail(vars, "clause variables must differ");
        Converter c(nullptr, true, 2);
        p.clause = InductiveClause(c.formula(form.list[2], env));
        seen_clause = true;
      } else if (kw == "crit") {
        seen_other = true;
        if (form.list.size() == 2) {
          p.crs.push_back(shape_check(closed_formula(form.list[1], p.clause), p.clause));
          continue;
        }
        if (form.list.size() < 3 || !form.list[1].is_atom()) fail(form, "malformed critical formula");
        const std::string& kind = form.list[1].atom;
        if (kind == "pred") {
          arity(form, 3);
          p.crs.push_back(make_pred(closed_term(form.list[2], p.clause), p.clause));
        } else if (kind == "eps") {
          arity(form, 4);
          Expression t = closed_term(form.list[2], p.clause);
          p.crs.push_back(make_epsilon(open_formula(form.list[3], p.clause, true), t, p.clause));
        } else if (kind == "ind") {
          arity(form, 4);
          Expression t = closed_term(form.list[2], p.clause);
          p.crs.push_back(make_induction(open_formula(form.list[3], p.clause, false), t, p.clause));
        } else if (kind == "inddef") {
          arity(form, 3);
          p.crs.push_back(make_inductive_def(closed_term(form.list[2], p.clause), p.clause));
        } else if (kind == "closure") {
          arity(form, 3);
          p.crs.push_back(make_closure(open_formula(form.list[2], p.clause, false), p.clause));
        } else {
          fail(form.list[1], "unknown critical formula kind '" + kind + "'");
        }
      } else if (kw == "goal") {
        seen_other = true;
        if (form.list.size() != 2 && form.list.size() != 3) fail(form, "expected (goal (exists x PHI) [T])");
        Expression phi = open_formula(form.list[1], p.clause, true);
        p.goals.push_back(make_goal(phi, p.clause));
        if (form.list.size() == 3)
          p.crs.push_back(make_epsilon(phi, closed_term(form.list[2], p.clause), p.clause));
      } else if (kw == "option") {
        arity(form, 3);
        const std::string& key = name_of(form.list[1]);
        if (key != "max-steps") fail(form.list[1], "unknown option '" + key + "'");
        const SExpr& val = form.list[2];
        if (!val.is_atom() || !is_natural_literal(val.atom) || Natural(val.atom) == 0 ||
            Natural(val.atom) > Natural(std::numeric_limits<std::uint64_t>::max()))
          fail(val, "max-steps must be a positive integer");
        p.options[key] = Natural(val.atom).str();
      } else {
        fail(form.list[0], "unknown form '" + kw + "'");
      }
    } catch (const SyntaxError&) {
      throw;
    } catch (const std::exception& ex) {
      fail(form, ex.what());
    }
  }
  return p;
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

namespace {

std::string surface(const Expression& e, const std::vector<std::string>& names, const char* set) {
  auto kids = [&](const char* op) {
    std::string out = std::string("(") + op;
    for (const auto& k : e.children()) out += " " + surface(k, names, set);
    return out + ")";
  };
  switch (e.kind()) {
    case Kind::Numeral:
      return e.numeral().str();
    case Kind::Var:
      if (e.var() < names.size()) return names[e.var()];
      return "%" + std::to_string(e.var());
    case Kind::Succ:
      return kids("s");
    case Kind::Add:
      return kids("+");
    case Kind::Mul:
      return kids("*");
    case Kind::Skolem: {
      const SkolemSymbol& c = e.symbol();
      std::string out = c.clause_witness() ? "(cI " : "(c " + std::to_string(c.arity()) + " ";
      out += to_string(c.index());
      for (const auto& k : e.children()) out += " " + surface(k, names, set);
      return out + ")";
    }
    case Kind::Eq:
      return kids("=");
    case Kind::Lt:
      return kids("<");
    case Kind::InI:
      return "(in " + surface(e.child(0), names, set) + " " + set + ")";
    case Kind::Not:
      return kids("not");
    case Kind::And:
      return kids("and");
    case Kind::Or:
      return kids("or");
    case Kind::Top:
      return "top";
    case Kind::Bottom:
      return "bot";
  }
  return "?";
}

}  // namespace

std::string to_surface(const Expression& e, const std::vector<std::string>& names) {
  return surface(e, names, "I");
}

std::string serialize_problem(const Problem& p) {
  std::string out;
  const std::vector<std::string> x{"x"};
  if (!(p.clause == InductiveClause()))
    out += "(clause (y x) " + surface(p.clause.body(), {"y", "x"}, "X") + ")\n";
  for (const auto& cr : p.crs) {
    switch (cr.kind) {
      case CritKind::Pred:
        out += "(crit pred " + to_surface(cr.s, {}) + ")\n";
        break;
      case CritKind::Epsilon:
        out += "(crit eps " + to_surface(cr.t, {}) + " (exists x " + to_surface(cr.phi, x) + "))\n";
        break;
      case CritKind::Induction:
        out += "(crit ind " + to_surface(cr.t, {}) + " (x " + to_surface(cr.phi, x) + "))\n";
        break;
      case CritKind::InductiveDef:
        out += "(crit inddef " + to_surface(cr.t, {}) + ")\n";
        break;
      case CritKind::Closure:
        out += "(crit closure (x " + to_surface(cr.phi, x) + "))\n";
        break;
    }
  }
  for (const auto& g : p.goals) out += "(goal (exists x " + to_surface(g.phi, x) + "))\n";
  for (const auto& [k, v] : p.options) out += "(option " + k + " " + v + ")\n";
  return out;
}

}  // namespace eps
