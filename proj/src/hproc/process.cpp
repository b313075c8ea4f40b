#include "eps/hproc/process.hpp"

#include <algorithm>

#include "eps/lang/skolem.hpp"
#include "eps/subst/reduce.hpp"

namespace eps {

namespace {

Natural eval_natural(const Expression& t, const EpsilonSubstitution& ext) {
  Expression r = reduce_term(t, ext);
  if (!r.is_numeral()) throw ProcessError("term does not reduce to a numeral: " + to_string(t));
  return r.numeral();
}

// The Skolem term with its arguments reduced; must be canonical.
CanonicalExpression canonical_skolem(const Expression& t, const EpsilonSubstitution& ext) {
  std::vector<Expression> args;
  for (const auto& a : t.children()) {
    Expression r = reduce_term(a, ext);
    if (!r.is_numeral()) throw ProcessError("argument does not reduce: " + to_string(a));
    args.push_back(r);
  }
  return CanonicalExpression(skolem(t.symbol(), std::move(args)));
}

bool index_holds(const CanonicalExpression& e, const Natural& w, const EpsilonSubstitution& ext) {
  auto args = e.args();
  return models(ext, instantiate(e.expr().symbol(), num(w), args));
}

std::optional<Natural> least_witness(const CanonicalExpression& e, const Natural& from,
                                     const Natural& upto_inclusive, const EpsilonSubstitution& ext) {
  for (Natural w = from; w <= upto_inclusive; ++w)
    if (index_holds(e, w, ext)) return w;
  return std::nullopt;
}

Value term_value(const Natural& n) { return n == 0 ? Value::unknown() : Value::number(n); }

}  // namespace

const char* rank_case_name(RankCase c) {
  switch (c) {
    case RankCase::Low:
      return "Low";
    case RankCase::High:
      return "High";
    case RankCase::OmegaPos:
      return "OmegaPos";
    case RankCase::OmegaNeg:
      return "OmegaNeg";
  }
  return "?";
}

RankCase parse_rank_case(const std::string& s) {
  for (RankCase c : {RankCase::Low, RankCase::High, RankCase::OmegaPos, RankCase::OmegaNeg})
    if (s == rank_case_name(c)) return c;
  throw std::invalid_argument("unknown rank case: " + s);
}

RankCase rank_case_of(const CanonicalExpression& e) {
  Rank r = e.rank();
  if (r.below_omega()) return RankCase::Low;
  if (r.above_omega()) return RankCase::High;
  return e.is_formula() ? RankCase::OmegaPos : RankCase::OmegaNeg;
}

const char* status_name(Status s) {
  switch (s) {
    case Status::Solved:
      return "solved";
    case Status::StepLimit:
      return "step-limit";
    case Status::InternalError:
      return "internal-error";
  }
  return "?";
}

bool is_solving(const EpsilonSubstitution& s, const std::vector<CriticalFormula>& crs) {
  EpsilonSubstitution ext = s.extended();
  return std::all_of(crs.begin(), crs.end(),
                     [&](const CriticalFormula& cr) { return models(ext, cr.formula); });
}

std::optional<Analysis> analyze(const HistoricalSubstitution& hs, const CriticalFormula& cr,
                                const InductiveClause& clause, std::size_t index) {
  EpsilonSubstitution ext = hs.s.extended();
  if (models(ext, cr.formula)) return std::nullopt;

  Analysis a;
  a.index = index;
  a.kind = cr.kind;
  switch (cr.kind) {
    case CritKind::Pred: {
      Natural s = eval_natural(cr.s, ext);
      if (s == 0) throw ProcessError("pred: false with s = 0");
      a.e = canonical_skolem(cr.witness, ext);
      a.v = Value::number(s - 1);
      break;
    }
    case CritKind::Epsilon: {
      a.e = canonical_skolem(cr.witness, ext);
      Natural t = eval_natural(cr.t, ext);
      auto m = least_witness(*a.e, 0, t, ext);
      if (!m) throw ProcessError("eps: phi(t) does not hold at any m <= |t|");
      a.v = Value::number(*m);
      break;
    }
    case CritKind::Induction: {
      a.e = canonical_skolem(cr.witness, ext);
      Natural t = eval_natural(cr.t, ext);
      if (t == 0) throw ProcessError("ind: false with |t| = 0");
      auto m = least_witness(*a.e, 0, t - 1, ext);
      if (!m) throw ProcessError("ind: no m < |t| with phi(m) and not phi(m+1)");
      a.v = Value::number(*m);
      break;
    }
    case CritKind::InductiveDef:
      a.e = canon_form(eval_natural(cr.t, ext));
      a.v = Value::top();
      break;
    case CritKind::Closure: {
      const Natural* first = nullptr;
      for (const auto& n : hs.hist.order) {
        if (models(ext, neg(apply_open(cr.phi, num(n))))) {
          first = &n;
          break;
        }
      }
      if (first == nullptr) throw ProcessError("closure: no n in P with not phi(n)");
      const Natural& n = *first;
      if (models(ext, neg(apply_open(cr.closure_a, num(n))))) {
        a.closure_subcase = 1;
        a.e = CanonicalExpression(clause.witness_term(num(n)));
        a.v = term_value(eval_natural(apply_open(cr.closure_d, num(n)), ext));
      } else {
        a.closure_subcase = 2;
        a.e = canonical_skolem(cr.witness, ext);
        auto w = least_witness(*a.e, 0, n, ext);
        if (!w) throw ProcessError("closure: antecedent witness not found below n");
        a.v = Value::number(*w);
      }
      break;
    }
  }
  return a;
}

std::optional<Analysis> choose(const HistoricalSubstitution& hs,
                               const std::vector<CriticalFormula>& crs,
                               const InductiveClause& clause) {
  std::optional<Analysis> best;
  for (std::size_t i = 0; i < crs.size(); ++i) {
    auto a = analyze(hs, crs[i], clause, i);
    if (!a) continue;
    if (!best || a->rank() < best->rank()) best = std::move(a);
  }
  return best;
}

HistoricalSubstitution rollback(const HistoricalSubstitution& hs, const Natural& n) {
  const EpsilonSubstitution& s = hs.s;
  History hist = hs.hist.prefix_without(n);
  auto in_prefix = [&](const Natural& m) {
    return std::find(hist.order.begin(), hist.order.end(), m) != hist.order.end();
  };
  EpsilonSubstitution kept = s.filter([&](const CanonicalExpression& e, const Value& v) {
    if (!e.rank().is_omega() || !is_positive_omega(e, v)) return false;
    return in_prefix(e.numeral_arg());
  });
  EpsilonSubstitution restored;
  if (hs.hist.contains(n)) {
    auto it = hs.hist.removed.find(n);
    if (it != hs.hist.removed.end()) restored = it->second;
  } else {
    restored = s.negative_omega();
  }
  return {s.below(Rank::omega()).merged(kept).merged(restored), std::move(hist)};
}

HistoricalSubstitution apply_analysis(const HistoricalSubstitution& hs, const Analysis& a,
                                      const InductiveClause& clause, RankCase* rank_case,
                                      Value* stored) {
  const CanonicalExpression& e = *a.e;
  const EpsilonSubstitution& s = hs.s;
  RankCase rc = rank_case_of(e);
  if (rank_case) *rank_case = rc;
  Value v = a.v;
  if (e.is_term() && v.is_num() && v.n() == 0)
    throw ProcessError("H-value 0 for term " + to_string(e.expr()));

  HistoricalSubstitution out;
  switch (rc) {
    case RankCase::Low:
      out = {s.at_most(e.rank()).with(e, v), History{}};
      break;
    case RankCase::High:
      out = {s.at_most(e.rank()).with(e, v), hs.hist};
      break;
    case RankCase::OmegaPos: {
      const Natural& n = e.numeral_arg();
      if (hs.hist.contains(n)) throw ProcessError("n in I already in P: " + n.str());
      out.s = s.below(Rank::omega()).merged(s.positive_omega()).with(e, Value::top());
      out.hist = hs.hist;
      out.hist.order.push_back(n);
      out.hist.removed.insert_or_assign(n, s.negative_omega().strict());
      break;
    }
    case RankCase::OmegaNeg: {
      const Natural& n = e.numeral_arg();
      out = rollback(hs, n);
      EpsilonSubstitution ext = out.s.extended();
      Natural bound = v.is_num() ? v.n() : Natural(0);
      std::optional<Natural> w;
      for (Natural i = 0; i <= bound; ++i) {
        if (models(ext, neg(clause.instance(num(i), num(n))))) {
          w = i;
          break;
        }
      }
      if (!w) throw ProcessError("no counterexample to B(x, " + n.str() + ", I) after rollback");
      v = term_value(*w);
      out.s = out.s.with(e, v);
      break;
    }
  }
  if (stored) *stored = v;
  return out;
}

StepResult h_step(const HistoricalSubstitution& hs, const std::vector<CriticalFormula>& crs,
                  const InductiveClause& clause, StepOptions opts, std::uint64_t step) {
  if (opts.require_cc && !is_cc(hs.s, clause))
    throw ProcessError("substitution is computationally inconsistent");
  auto chosen = choose(hs, crs, clause);
  if (!chosen) throw ProcessError("h_step on a solving substitution");

  StepResult r;
  r.record.step = step;
  r.record.chosen = *chosen;
  r.next = apply_analysis(hs, *chosen, clause, &r.record.rank_case, &r.record.v);

  const EpsilonSubstitution& before = hs.s;
  const EpsilonSubstitution& after = r.next.s;
  r.record.added = after.filter([&](const CanonicalExpression& e, const Value& v) {
                          const Value* p = before.find(e);
                          return p == nullptr || !(*p == v);
                        }).sorted_entries();
  r.record.removed = before.filter([&](const CanonicalExpression& e, const Value& v) {
                            const Value* p = after.find(e);
                            return p == nullptr || !(*p == v);
                          }).sorted_entries();
  r.record.order = r.next.hist.order;
  for (const auto& [n, sub] : r.next.hist.removed) {
    auto it = hs.hist.removed.find(n);
    if (it == hs.hist.removed.end() || !(it->second == sub)) r.record.v_added.emplace(n, sub);
  }
  for (const auto& [n, sub] : hs.hist.removed) {
    auto it = r.next.hist.removed.find(n);
    if (it == r.next.hist.removed.end() || !(it->second == sub)) r.record.v_removed.push_back(n);
  }
  r.next.s = r.next.s.strict();
  r.record.solving = is_solving(r.next.s, crs);
  return r;
}

Outcome run(const std::vector<CriticalFormula>& crs, const InductiveClause& clause,
            const RunLimits& limits, const std::function<void(const HStep&)>& on_step) {
  Outcome out;
  HistoricalSubstitution hs;
  bool solving = is_solving(hs.s, crs);
  std::uint64_t step = 0;
  for (; !solving; ++step) {
    if (step >= limits.max_steps) {
      out.status = Status::StepLimit;
      out.diagnostic = "no solving substitution after " + std::to_string(step) + " steps";
      break;
    }
    StepResult r;
    try {
      r = h_step(hs, crs, clause, {limits.check}, step);
      if (limits.check) {
        auto bad = incorrect_entries(r.next.s, clause);
        if (!bad.empty())
          throw ProcessError("incorrect entry after step " + std::to_string(step) + ": " +
                             to_string(bad.front().expr()));
        auto problems = validate(r.next, clause);
        if (!problems.empty())
          throw ProcessError("invalid history after step " + std::to_string(step) + ": " +
                             problems.front());
      }
    } catch (const std::exception& ex) {
      out.status = Status::InternalError;
      out.diagnostic = ex.what();
      break;
    }
    if (on_step) on_step(r.record);
    solving = r.record.solving;
    if (limits.keep_steps) out.steps.push_back(std::move(r.record));
    hs = std::move(r.next);
  }
  if (solving) out.status = Status::Solved;
  out.final = std::move(hs);
  out.step_count = step;
  return out;
}

Goal make_goal(Expression phi, const InductiveClause& clause) {
  if (phi.null() || !phi.is_formula() || max_var_plus_one(phi) > 1)
    throw ExprError("goal must be a formula in one variable");
  Goal g{phi, skolem_term_for(phi, 0, &clause), {}};
  g.expanded = apply_open(phi, g.witness);
  return g;
}

Natural extract_witness(const EpsilonSubstitution& s, const Goal& goal) {
  EpsilonSubstitution ext = s.extended();
  if (!models(ext, goal.expanded))
    throw ProcessError("goal is not true under the final substitution: " + to_string(goal.expanded));
  return eval_natural(goal.witness, ext);
}

}  // namespace eps
