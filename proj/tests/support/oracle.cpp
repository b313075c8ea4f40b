#include "oracle.hpp"

#include <algorithm>

namespace oracle {

using eps::Kind;

namespace {

template <class Lookup>
Natural term_with(const Expression& t, Lookup&& look);

template <class Lookup>
bool formula_with(const Expression& f, Lookup&& look) {
  switch (f.kind()) {
    case Kind::Eq:
      return term_with(f.child(0), look) == term_with(f.child(1), look);
    case Kind::Lt:
      return term_with(f.child(0), look) < term_with(f.child(1), look);
    case Kind::InI: {
      Value v = look(eps::canon_form(term_with(f.child(0), look)));
      return v.is_top();
    }
    case Kind::Not:
      return !formula_with(f.child(0), look);
    case Kind::And:
      return formula_with(f.child(0), look) && formula_with(f.child(1), look);
    case Kind::Or:
      return formula_with(f.child(0), look) || formula_with(f.child(1), look);
    case Kind::Top:
      return true;
    case Kind::Bottom:
      return false;
    default:
      throw std::invalid_argument("oracle: not a formula");
  }
}

template <class Lookup>
Natural term_with(const Expression& t, Lookup&& look) {
  switch (t.kind()) {
    case Kind::Numeral:
      return t.numeral();
    case Kind::Succ:
      return term_with(t.child(0), look) + 1;
    case Kind::Add:
      return term_with(t.child(0), look) + term_with(t.child(1), look);
    case Kind::Mul:
      return term_with(t.child(0), look) * term_with(t.child(1), look);
    case Kind::Skolem: {
      std::vector<Expression> args;
      for (const auto& a : t.children()) args.push_back(eps::num(term_with(a, look)));
      Value v = look(CanonicalExpression(eps::skolem(t.symbol(), std::move(args))));
      return v.is_num() ? v.n() : Natural(0);
    }
    default:
      throw std::invalid_argument("oracle: open or non-term expression");
  }
}

auto subst_lookup(const EpsilonSubstitution& s) {
  return [&s](const CanonicalExpression& k) {
    const Value* v = s.find(k);
    return v ? *v : Value::unknown();
  };
}

auto assign_lookup(const Assignment& a, bool (*enumerable)(const CanonicalExpression&)) {
  return [&a, enumerable](const CanonicalExpression& k) {
    auto it = a.find(k);
    if (it != a.end()) return it->second;
    if (enumerable && !enumerable(k)) return Value::unknown();
    throw NeedKey{k};
  };
}

bool is_negative_omega_entry(const CanonicalExpression& e, const Value& v) {
  if (!e.rank().is_omega()) return false;
  return e.is_term() ? v.is_num() : v.is_unknown();
}

}  // namespace

Natural eval_term(const Expression& t, const EpsilonSubstitution& s) {
  return term_with(t, subst_lookup(s));
}

bool eval_formula(const Expression& f, const EpsilonSubstitution& s) {
  return formula_with(f, subst_lookup(s));
}

Natural eval_term(const Expression& t, const Assignment& a,
                  bool (*enumerable)(const CanonicalExpression&)) {
  return term_with(t, assign_lookup(a, enumerable));
}

bool eval_formula(const Expression& f, const Assignment& a,
                  bool (*enumerable)(const CanonicalExpression&)) {
  return formula_with(f, assign_lookup(a, enumerable));
}

bool eval_closed_pa(const Expression& f) {
  return formula_with(f, [](const CanonicalExpression&) -> Value {
    throw std::invalid_argument("oracle: not a pure PA sentence");
  });
}

bool entry_correct(const CanonicalExpression& e, const Value& u, const EpsilonSubstitution& s,
                   const InductiveClause& clause) {
  if (u.is_unknown()) return true;
  if (e.is_formula()) {
    if (!u.is_top()) return false;
    Expression n = eps::num(e.numeral_arg());
    return eval_formula(clause.instance(clause.witness_term(n), n), s);
  }
  if (!u.is_num() || u.n() == 0) return false;
  const eps::SkolemSymbol& c = e.expr().symbol();
  std::vector<Expression> args(e.expr().children().begin(), e.expr().children().end());
  if (!eval_formula(eps::instantiate(c, eps::num(u.n()), args), s)) return false;
  for (Natural w = 0; w < u.n(); ++w)
    if (eval_formula(eps::instantiate(c, eps::num(w), args), s)) return false;
  return true;
}

std::optional<CanonicalExpression> first_incorrect(const EpsilonSubstitution& s,
                                                   const InductiveClause& clause) {
  for (const auto& [e, u] : s)
    if (!entry_correct(e, u, s, clause)) return e;
  return std::nullopt;
}

bool solving(const EpsilonSubstitution& s, const std::vector<eps::CriticalFormula>& crs) {
  return std::all_of(crs.begin(), crs.end(),
                     [&](const eps::CriticalFormula& cr) { return eval_formula(cr.formula, s); });
}

namespace {

bool fin_rank(const CanonicalExpression& k) { return k.rank().below_omega(); }

struct Search {
  const std::vector<eps::CriticalFormula>& crs;
  unsigned n_max;
  std::uint64_t budget;
  SearchResult out;

  // 1: found, 0: dead end, -1: budget exhausted
  int dfs(Assignment& a) {
    for (const auto& cr : crs) {
      try {
        if (!eval_formula(cr.formula, a, fin_rank)) {
          ++out.leaves;
          return out.leaves > budget ? -1 : 0;
        }
      } catch (const NeedKey& need) {
        std::vector<Value> choices{Value::unknown()};
        if (need.key.is_term())
          for (unsigned v = 1; v <= n_max; ++v) choices.push_back(Value::number(v));
        else
          choices.push_back(Value::top());
        for (const auto& v : choices) {
          a.insert_or_assign(need.key, v);
          int r = dfs(a);
          if (r != 0) return r;
        }
        a.erase(need.key);
        return 0;
      }
    }
    ++out.leaves;
    out.found = true;
    out.witness = a;
    return 1;
  }
};

}  // namespace

SearchResult brute_force(const std::vector<eps::CriticalFormula>& crs, unsigned n_max,
                         std::uint64_t leaf_budget) {
  Search s{crs, n_max, leaf_budget, {}};
  Assignment a;
  s.dfs(a);
  return s.out;
}

std::optional<eps::HistoricalSubstitution> omega_neg(const eps::HistoricalSubstitution& hs,
                                                     const Natural& n, const Value& v,
                                                     const InductiveClause& clause) {
  const auto& p = hs.hist.order;
  auto cut = std::find(p.begin(), p.end(), n);
  std::vector<Natural> prefix(p.begin(), cut);
  auto in_prefix = [&](const Natural& m) {
    return std::find(prefix.begin(), prefix.end(), m) != prefix.end();
  };

  std::map<CanonicalExpression, Value> out;
  for (const auto& [e, u] : hs.s)
    if (e.rank().below_omega()) out.insert_or_assign(e, u);
  for (const auto& [e, u] : hs.s) {
    if (!e.rank().is_omega()) continue;
    bool c_unknown = e.is_term() && u.is_unknown();
    bool member = e.is_formula() && u.is_top();
    if ((c_unknown || member) && in_prefix(e.numeral_arg())) out.insert_or_assign(e, u);
  }
  if (cut != p.end()) {
    auto it = hs.hist.removed.find(n);
    if (it != hs.hist.removed.end())
      for (const auto& [e, u] : it->second) out.insert_or_assign(e, u);
  } else {
    for (const auto& [e, u] : hs.s)
      if (is_negative_omega_entry(e, u)) out.insert_or_assign(e, u);
  }

  EpsilonSubstitution s;
  for (const auto& [e, u] : out) s = s.with(e, u);

  Natural bound = v.is_num() ? v.n() : Natural(0);
  std::optional<Natural> w;
  for (Natural i = 0; i <= bound; ++i) {
    if (!eval_formula(clause.instance(eps::num(i), eps::num(n)), s)) {
      w = i;
      break;
    }
  }
  if (!w) return std::nullopt;
  CanonicalExpression cn(clause.witness_term(eps::num(n)));
  s = s.with(cn, *w == 0 ? Value::unknown() : Value::number(*w));

  eps::History h;
  h.order = prefix;
  for (const auto& m : prefix) {
    auto it = hs.hist.removed.find(m);
    if (it != hs.hist.removed.end()) h.removed.emplace(m, it->second);
  }
  return eps::HistoricalSubstitution{s, h};
}

std::vector<CanonicalExpression> canonical_parts(const Expression& e) {
  std::vector<CanonicalExpression> out;
  auto push = [&](const Expression& x) {
    CanonicalExpression c(x);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  };
  auto walk = [&](auto&& self, const Expression& x) -> void {
    if (x.kind() == Kind::Skolem &&
        std::all_of(x.children().begin(), x.children().end(),
                    [](const Expression& k) { return k.is_numeral(); }))
      push(x);
    if (x.kind() == Kind::InI && x.child(0).is_numeral()) push(x);
    for (const auto& k : x.children()) self(self, k);
  };
  walk(walk, e);
  return out;
}

}  // namespace oracle
