#pragma once

#include <map>
#include <string>
#include <vector>

#include "eps/lang/clause.hpp"
#include "eps/subst/substitution.hpp"

namespace eps {

// Substitution history (P, V): P lists the numerals n of the formulas n in I
// in the order they were added; V records, for each of them, the negative
// rank-Omega part that was removed when it was added.
struct History {
  std::vector<Natural> order;                      // P
  std::map<Natural, EpsilonSubstitution> removed;  // V, keyed by the numeral

  bool contains(const Natural& n) const;
  // Longest initial segment of P not containing n.
  History prefix_without(const Natural& n) const;

  friend bool operator==(const History&, const History&) = default;
};

struct HistoricalSubstitution {
  EpsilonSubstitution s;
  History hist;

  friend bool operator==(const HistoricalSubstitution&, const HistoricalSubstitution&) = default;
};

// For each i, |B(0, n_i, I)| under the standard extension of
// {(n_j in I, top) | j < i} is true.
bool is_admissible(const std::vector<Natural>& order, const InductiveClause& clause);

// Violations of the historical-substitution invariants and of admissibility.
// Empty means valid.
std::vector<std::string> validate(const HistoricalSubstitution& hs, const InductiveClause& clause);

std::string history_str(const History& h);

}  // namespace eps
