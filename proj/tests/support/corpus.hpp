#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eps/frontend/problem.hpp"

namespace corpus {

// Inductive clauses B(y, x, X) used by the generated problems.
inline constexpr const char* kClauseAll = "(or (not (< y x)) (in y X))";
inline constexpr const char* kClausePred = "(or (not (= (s y) x)) (in y X))";
inline constexpr const char* kClauseBounded = "(and (< x 5) (or (not (< y x)) (in y X)))";

struct Entry {
  std::string name;
  std::string text;
  eps::Problem problem;
  bool pa_only = false;
};

inline constexpr std::uint64_t kDefaultSeed = 0x1d1e75ull;

// Deterministic for a given seed: the same problems in the same order.
std::vector<Entry> generate(std::uint64_t seed = kDefaultSeed, std::size_t count = 240);

}  // namespace corpus
