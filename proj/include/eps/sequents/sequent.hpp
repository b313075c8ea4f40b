#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "eps/history/history.hpp"
#include "eps/hproc/process.hpp"

namespace eps {

enum class Flag : char { T = 't', F = 'f' };

// Entries that carry a flag: value ? or rank Omega.
bool needs_flag(const CanonicalExpression& e, const Value& v);

// A sequent (S, P, V, F). F marks each flagged entry as fixed (t) or
// temporary (f).
struct Sequent {
  HistoricalSubstitution hs;
  std::map<CanonicalExpression, Flag> flags;

  // F constantly t.
  static Sequent from(HistoricalSubstitution hs);

  bool well_formed() const;
  EpsilonSubstitution theta_t() const;
  EpsilonSubstitution theta_f() const;
  std::string str() const;

  friend bool operator==(const Sequent&, const Sequent&) = default;
};

// (e,u),Theta for a term e of rank other than Omega and u a numeral.
Sequent add_term(const Sequent& th, const CanonicalExpression& e, const Natural& u);
// (e,?,i),Theta
Sequent add_unknown(const Sequent& th, const CanonicalExpression& e, Flag i);
// (e,u,i),Theta for a term e of rank Omega and u a numeral.
Sequent add_omega_term(const Sequent& th, const CanonicalExpression& e, const Natural& u, Flag i);
// (e,top,i,P_e,V_e),Theta for e = n in I; requires P_e proper for e, Theta.
Sequent add_formula(const Sequent& th, const CanonicalExpression& e, Flag i,
                    const std::vector<Natural>& pe,
                    const std::map<Natural, EpsilonSubstitution>& ve,
                    const InductiveClause& clause);

bool is_proper(const CanonicalExpression& e, const Sequent& th, const std::vector<Natural>& pe,
               const InductiveClause& clause);

// Canonical expressions consulted while computing H(S,P,V) over S itself,
// together with the keys required by the side conditions.
std::set<CanonicalExpression> footprint(const HistoricalSubstitution& hs,
                                        const std::vector<CriticalFormula>& crs,
                                        const InductiveClause& clause);

// False unless S is correct, nonsolving, and every consultation stays in S.
bool h_step_applies(const HistoricalSubstitution& hs, const std::vector<CriticalFormula>& crs,
                    const InductiveClause& clause);

// Requires h_step_applies; throws std::logic_error otherwise.
std::set<CanonicalExpression> active_expressions(const HistoricalSubstitution& hs,
                                                 const std::vector<CriticalFormula>& crs,
                                                 const InductiveClause& clause);

// H(Theta); new flagged entries get t.
Sequent h_sequent(const Sequent& th, const std::vector<CriticalFormula>& crs,
                  const InductiveClause& clause);

enum class AxiomKind { AxF, AxS, AxH };
const char* axiom_name(AxiomKind k);

struct AxiomReport {
  std::vector<AxiomKind> kinds;  // AxF and AxS first
  std::optional<CanonicalExpression> e;  // for AxH
  Value v = Value::unknown();
};

AxiomReport classify_axiom(const Sequent& th, const std::vector<CriticalFormula>& crs,
                           const InductiveClause& clause);

// omega * rho + count
struct MeasureValue {
  std::uint32_t rho = 0;
  std::uint64_t count = 0;
  friend auto operator<=>(const MeasureValue&, const MeasureValue&) = default;
  std::string str() const;
};

// C together with F(e,u) for every term entry of S.
std::vector<Expression> measure_formulas(const Sequent& th, const std::vector<Expression>& c,
                                         const InductiveClause& clause);

// Membership atoms plus Skolem terms, counted with multiplicity.
std::uint64_t d(const Expression& phi);
std::uint64_t d_r(const Expression& phi, std::uint32_t r);
std::uint32_t rho(const Sequent& th, const std::vector<Expression>& c,
                  const InductiveClause& clause);
MeasureValue nu(const Sequent& th, const std::vector<Expression>& c,
                const InductiveClause& clause);

}  // namespace eps
