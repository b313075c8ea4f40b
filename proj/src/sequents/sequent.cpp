#include "eps/sequents/sequent.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

#include "eps/lang/rank.hpp"
#include "eps/subst/reduce.hpp"

namespace eps {

bool needs_flag(const CanonicalExpression& e, const Value& v) {
  return v.is_unknown() || e.rank().is_omega();
}

Sequent Sequent::from(HistoricalSubstitution hs) {
  Sequent th{std::move(hs), {}};
  for (const auto& [e, v] : th.hs.s)
    if (needs_flag(e, v)) th.flags.emplace(e, Flag::T);
  return th;
}

bool Sequent::well_formed() const {
  std::size_t expected = 0;
  for (const auto& [e, v] : hs.s) {
    if (!needs_flag(e, v)) continue;
    ++expected;
    if (!flags.contains(e)) return false;
  }
  return expected == flags.size();
}

namespace {

EpsilonSubstitution with_flag(const Sequent& th, Flag want) {
  return th.hs.s.filter([&](const CanonicalExpression& e, const Value&) {
    auto it = th.flags.find(e);
    return it != th.flags.end() && it->second == want;
  });
}

void require_absent(const Sequent& th, const CanonicalExpression& e) {
  if (th.hs.s.contains(e))
    throw std::invalid_argument("already in the sequent: " + to_string(e.expr()));
}

}  // namespace

EpsilonSubstitution Sequent::theta_t() const { return with_flag(*this, Flag::T); }
EpsilonSubstitution Sequent::theta_f() const { return with_flag(*this, Flag::F); }

std::string Sequent::str() const {
  std::string out = hs.s.str() + " " + history_str(hs.hist) + " F=(";
  bool first = true;
  for (const auto& [e, v] : hs.s.sorted_entries()) {
    auto it = flags.find(e);
    if (it == flags.end()) continue;
    if (!first) out += ' ';
    first = false;
    out += "(" + to_string(e.expr()) + " " + static_cast<char>(it->second) + ")";
  }
  return out + ")";
}

Sequent add_term(const Sequent& th, const CanonicalExpression& e, const Natural& u) {
  if (!e.is_term() || e.rank().is_omega() || u == 0)
    throw std::invalid_argument("add_term: needs a non-Omega term and a positive value");
  require_absent(th, e);
  Sequent out = th;
  out.hs.s = th.hs.s.with(e, Value::number(u));
  return out;
}

Sequent add_unknown(const Sequent& th, const CanonicalExpression& e, Flag i) {
  require_absent(th, e);
  Sequent out = th;
  out.hs.s = th.hs.s.with(e, Value::unknown());
  out.flags.emplace(e, i);
  return out;
}

Sequent add_omega_term(const Sequent& th, const CanonicalExpression& e, const Natural& u, Flag i) {
  if (!e.is_term() || !e.rank().is_omega() || u == 0)
    throw std::invalid_argument("add_omega_term: needs a rank-Omega term and a positive value");
  require_absent(th, e);
  Sequent out = th;
  out.hs.s = th.hs.s.with(e, Value::number(u));
  out.flags.emplace(e, i);
  return out;
}

bool is_proper(const CanonicalExpression& e, const Sequent& th, const std::vector<Natural>& pe,
               const InductiveClause& clause) {
  if (!e.is_formula() || th.hs.s.contains(e)) return false;
  if (pe.empty() || pe.back() != e.numeral_arg()) return false;
  std::set<Natural> seen;
  for (const auto& m : pe) {
    if (!seen.insert(m).second) return false;
    if (th.hs.hist.contains(m)) return false;
    const Value* cm = th.hs.s.find(CanonicalExpression(clause.witness_term(num(m))));
    if (cm != nullptr && !cm->is_unknown()) return false;
  }
  std::vector<Natural> order = th.hs.hist.order;
  order.insert(order.end(), pe.begin(), pe.end());
  return is_admissible(order, clause);
}

Sequent add_formula(const Sequent& th, const CanonicalExpression& e, Flag i,
                    const std::vector<Natural>& pe,
                    const std::map<Natural, EpsilonSubstitution>& ve,
                    const InductiveClause& clause) {
  if (!is_proper(e, th, pe, clause)) throw std::invalid_argument("add_formula: P_e not proper");
  std::set<Natural> keys;
  for (const auto& [m, sub] : ve) keys.insert(m);
  if (keys != std::set<Natural>(pe.begin(), pe.end()))
    throw std::invalid_argument("add_formula: dom(V_e) differs from P_e");
  Sequent out = th;
  for (const auto& m : pe) {
    CanonicalExpression f = canon_form(m);
    require_absent(th, f);
    out.hs.s = out.hs.s.with(f, Value::top());
    out.flags.emplace(f, i);
    out.hs.hist.order.push_back(m);
  }
  for (const auto& [m, sub] : ve) out.hs.hist.removed.insert_or_assign(m, sub);
  return out;
}

std::set<CanonicalExpression> footprint(const HistoricalSubstitution& hs,
                                        const std::vector<CriticalFormula>& crs,
                                        const InductiveClause& clause) {
  auto log = std::make_shared<LookupLog>();
  HistoricalSubstitution rec{hs.s.recording(log), hs.hist};
  auto chosen = choose(rec, crs, clause);
  if (!chosen) return {};
  apply_analysis(rec, *chosen, clause);

  std::set<CanonicalExpression> keys(log->keys.begin(), log->keys.end());
  const CanonicalExpression& e = *chosen->e;
  keys.insert(e);
  if (e.rank().is_omega()) {
    if (e.is_term()) {
      keys.insert(canon_form(e.numeral_arg()));
      for (const auto& [x, v] : hs.s)
        if (x.is_clause_witness() && v.is_unknown()) keys.insert(canon_form(x.numeral_arg()));
    } else {
      keys.insert(CanonicalExpression(clause.witness_term(num(e.numeral_arg()))));
    }
  }
  return keys;
}

bool h_step_applies(const HistoricalSubstitution& hs, const std::vector<CriticalFormula>& crs,
                    const InductiveClause& clause) {
  try {
    if (!is_correct(hs.s, clause) || is_solving(hs.s, crs)) return false;
    auto keys = footprint(hs, crs, clause);
    auto chosen = choose(hs, crs, clause);
    EpsilonSubstitution restored;
    if (rank_case_of(*chosen->e) == RankCase::OmegaNeg)
      restored = rollback(hs, chosen->e->numeral_arg()).s;
    return std::all_of(keys.begin(), keys.end(), [&](const CanonicalExpression& k) {
      return hs.s.contains(k) || restored.contains(k);
    });
  } catch (const std::exception&) {
    return false;
  }
}

std::set<CanonicalExpression> active_expressions(const HistoricalSubstitution& hs,
                                                 const std::vector<CriticalFormula>& crs,
                                                 const InductiveClause& clause) {
  if (!h_step_applies(hs, crs, clause))
    throw std::logic_error("active_expressions: the H-step does not apply");
  auto chosen = choose(hs, crs, clause);
  HistoricalSubstitution next = apply_analysis(hs, *chosen, clause);
  Rank r = chosen->rank();
  std::set<CanonicalExpression> out;
  for (const auto& [e, v] : hs.s) {
    if (e.rank() != r) continue;
    const Value* w = next.s.find(e);
    if (w == nullptr || !(*w == v)) out.insert(e);
  }
  return out;
}

Sequent h_sequent(const Sequent& th, const std::vector<CriticalFormula>& crs,
                  const InductiveClause& clause) {
  auto chosen = choose(th.hs, crs, clause);
  if (!chosen) throw std::logic_error("h_sequent: solving");
  Sequent out{apply_analysis(th.hs, *chosen, clause), {}};
  out.hs.s = out.hs.s.strict();
  for (const auto& [e, v] : out.hs.s) {
    if (!needs_flag(e, v)) continue;
    auto it = th.flags.find(e);
    out.flags.emplace(e, th.hs.s.contains(e) && it != th.flags.end() ? it->second : Flag::T);
  }
  return out;
}

const char* axiom_name(AxiomKind k) {
  switch (k) {
    case AxiomKind::AxF:
      return "AxF";
    case AxiomKind::AxS:
      return "AxS";
    case AxiomKind::AxH:
      return "AxH";
  }
  return "?";
}

AxiomReport classify_axiom(const Sequent& th, const std::vector<CriticalFormula>& crs,
                           const InductiveClause& clause) {
  AxiomReport rep;
  if (is_ci(th.hs.s, clause)) rep.kinds.push_back(AxiomKind::AxF);
  if (is_solving(th.hs.s, crs)) rep.kinds.push_back(AxiomKind::AxS);
  if (h_step_applies(th.hs, crs, clause)) {
    auto active = active_expressions(th.hs, crs, clause);
    bool temp = std::any_of(active.begin(), active.end(), [&](const CanonicalExpression& e) {
      auto it = th.flags.find(e);
      return it != th.flags.end() && it->second == Flag::F;
    });
    if (temp) {
      auto chosen = choose(th.hs, crs, clause);
      Value stored = Value::unknown();
      apply_analysis(th.hs, *chosen, clause, nullptr, &stored);
      rep.kinds.push_back(AxiomKind::AxH);
      rep.e = chosen->e;
      rep.v = stored;
    }
  }
  return rep;
}

std::string MeasureValue::str() const {
  if (rho == 0) return std::to_string(count);
  return "w*" + std::to_string(rho) + "+" + std::to_string(count);
}

std::vector<Expression> measure_formulas(const Sequent& th, const std::vector<Expression>& c,
                                         const InductiveClause& clause) {
  std::vector<Expression> out = c;
  for (const auto& [e, u] : th.hs.s)
    if (e.is_term()) out.push_back(correctness_formula(e, u, clause));
  return out;
}

std::uint64_t d(const Expression& phi) {
  std::uint64_t n = (phi.kind() == Kind::Skolem || phi.kind() == Kind::InI) ? 1 : 0;
  for (const auto& k : phi.children()) n += d(k);
  return n;
}

std::uint64_t d_r(const Expression& phi, std::uint32_t r) {
  return simple_rank(phi) == r ? d(phi) : 0;
}

std::uint32_t rho(const Sequent& th, const std::vector<Expression>& c,
                  const InductiveClause& clause) {
  std::uint32_t out = 0;
  EpsilonSubstitution s = th.hs.s.strict();
  for (const auto& phi : measure_formulas(th, c, clause))
    out = std::max(out, simple_rank(reduce_formula(phi, s)));
  return out;
}

MeasureValue nu(const Sequent& th, const std::vector<Expression>& c,
                const InductiveClause& clause) {
  EpsilonSubstitution s = th.hs.s.strict();
  std::vector<Expression> reduced;
  for (const auto& phi : measure_formulas(th, c, clause)) reduced.push_back(reduce_formula(phi, s));
  MeasureValue m;
  for (const auto& r : reduced) m.rho = std::max(m.rho, simple_rank(r));
  for (const auto& r : reduced) m.count += d_r(r, m.rho);
  return m;
}

}  // namespace eps
