#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eps/history/history.hpp"
#include "eps/hproc/critical.hpp"

namespace eps {

// A violated invariant that the process should guarantee.
class ProcessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class RankCase { Low, High, OmegaPos, OmegaNeg };

const char* rank_case_name(RankCase c);
RankCase parse_rank_case(const std::string& s);
RankCase rank_case_of(const CanonicalExpression& e);

// The pair (e_I, v_I) proposed for an unsatisfied critical formula.
struct Analysis {
  std::size_t index = 0;
  CritKind kind = CritKind::Pred;
  int closure_subcase = 0;  // 1: e = c_n, 2: antecedent witness; 0 otherwise
  std::optional<CanonicalExpression> e;
  Value v = Value::unknown();

  Rank rank() const { return e->rank(); }
};

bool is_solving(const EpsilonSubstitution& s, const std::vector<CriticalFormula>& crs);

// nullopt when the standard extension of S satisfies cr.
std::optional<Analysis> analyze(const HistoricalSubstitution& hs, const CriticalFormula& cr,
                                const InductiveClause& clause, std::size_t index = 0);

// Least rank, then least index, among the unsatisfied formulas. nullopt when
// solving.
std::optional<Analysis> choose(const HistoricalSubstitution& hs,
                               const std::vector<CriticalFormula>& crs,
                               const InductiveClause& clause);

struct HStep {
  std::uint64_t step = 0;
  Analysis chosen;
  RankCase rank_case = RankCase::Low;
  Value v = Value::unknown();  // the value actually stored for e
  std::vector<EpsilonSubstitution::Entry> added;
  std::vector<EpsilonSubstitution::Entry> removed;
  std::vector<Natural> order;  // P afterwards
  std::map<Natural, EpsilonSubstitution> v_added;
  std::vector<Natural> v_removed;
  bool solving = false;
};

// The negative-Omega base: S_{<Omega} with S', V' and the history (P', V|P')
// for removing n in I. The H-expression c_n is not yet included.
HistoricalSubstitution rollback(const HistoricalSubstitution& hs, const Natural& n);

// Applies the H-step for a given analysis. The value of a negative-Omega
// expression c_n is the least w up to the proposed value with
// not B(w, n, I) under the rolled-back substitution; ? when that is 0.
HistoricalSubstitution apply_analysis(const HistoricalSubstitution& hs, const Analysis& a,
                                      const InductiveClause& clause,
                                      RankCase* rank_case = nullptr, Value* stored = nullptr);

struct StepOptions {
  bool require_cc = false;  // full computational-consistency check first
};

struct StepResult {
  HistoricalSubstitution next;
  HStep record;
};

StepResult h_step(const HistoricalSubstitution& hs, const std::vector<CriticalFormula>& crs,
                  const InductiveClause& clause, StepOptions opts = {}, std::uint64_t step = 0);

struct RunLimits {
  std::uint64_t max_steps = 1'000'000;
  bool check = false;
  bool keep_steps = true;
};

enum class Status { Solved, StepLimit, InternalError };

const char* status_name(Status s);

struct Outcome {
  Status status = Status::Solved;
  HistoricalSubstitution final;
  std::uint64_t step_count = 0;
  std::vector<HStep> steps;
  std::string diagnostic;
};

Outcome run(const std::vector<CriticalFormula>& crs, const InductiveClause& clause,
            const RunLimits& limits = {},
            const std::function<void(const HStep&)>& on_step = {});

// A Sigma_1 goal exists x. phi(x) with phi open in %0.
struct Goal {
  Expression phi;
  Expression witness;   // c_{exists x phi}(...)
  Expression expanded;  // phi(witness)
};

Goal make_goal(Expression phi, const InductiveClause& clause);

// The numeral |witness| under the standard extension of S. Throws ProcessError
// when S does not make the expanded goal true.
Natural extract_witness(const EpsilonSubstitution& s, const Goal& goal);

}  // namespace eps
