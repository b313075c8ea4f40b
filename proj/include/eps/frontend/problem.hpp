#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "eps/hproc/critical.hpp"
#include "eps/hproc/process.hpp"
#include "eps/lang/clause.hpp"
#include "eps/lang/sexpr.hpp"

namespace eps {

struct Problem {
  InductiveClause clause;  // bottom when the file declares none
  std::vector<CriticalFormula> crs;
  std::vector<Goal> goals;
  std::map<std::string, std::string> options;

  std::uint64_t max_steps(std::uint64_t fallback = 1'000'000) const;

  friend bool operator==(const Problem& a, const Problem& b);
};

// Parses a problem file. Quantifiers are Skolemized and every critical
// formula is shape-checked. Errors are SyntaxError with a source location.
Problem parse_problem(std::string_view text);
Problem load_problem(const std::string& path);

// Recognizes a closed formula as one of the five critical-formula shapes.
// Throws ExprError("not a critical formula") otherwise.
CriticalFormula shape_check(const Expression& phi, const InductiveClause& clause);

// Text that parse_problem reads back to an equal Problem.
std::string serialize_problem(const Problem& p);

// Surface rendering: variable %i is printed as names[i].
std::string to_surface(const Expression& e, const std::vector<std::string>& names);

}  // namespace eps
