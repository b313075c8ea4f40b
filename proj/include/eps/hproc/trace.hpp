#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eps/hproc/process.hpp"

namespace eps {

// One line of the structured trace. Expressions, values and numerals are kept
// in their canonical textual form so that records compare byte for byte.
struct TraceRecord {
  using Pair = std::pair<std::string, std::string>;

  std::uint64_t step = 0;
  std::uint64_t index = 0;  // I
  std::string crit;         // kind of Cr_I
  int closure_case = 0;
  std::string rank_case;
  std::string rank;
  std::string e;
  std::string v;
  std::vector<Pair> added;
  std::vector<Pair> removed;
  std::vector<std::string> order;  // P
  std::vector<Pair> v_added;       // numeral -> substitution
  std::vector<std::string> v_removed;
  bool solving = false;

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

TraceRecord to_record(const HStep& h);

// Single-line JSON with a fixed key order.
std::string to_json_line(const TraceRecord& r);
// Throws std::invalid_argument on malformed input.
TraceRecord parse_json_line(const std::string& line);

// Multi-line human-readable rendering.
std::string to_text(const TraceRecord& r);

// Applies the recorded deltas to the predecessor state.
HistoricalSubstitution replay_delta(const HistoricalSubstitution& before, const TraceRecord& r);

}  // namespace eps
