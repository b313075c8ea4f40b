#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eps/frontend/problem.hpp"
#include "eps/hproc/trace.hpp"

namespace eps {

// Exit codes shared by the subcommands.
inline constexpr int kExitSolved = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitStepLimit = 2;
inline constexpr int kExitInternal = 3;
inline constexpr int kExitCheckFailed = 4;

enum class Format { Text, Structured };

struct RunConfig {
  std::optional<std::uint64_t> max_steps;  // falls back to the problem option, then 10^6
  bool check = false;
  std::string trace_path;  // empty: the trace goes to `out`
  Format format = Format::Text;
};

int cmd_run(const std::string& problem_path, const RunConfig& cfg, std::ostream& out,
            std::ostream& err);
int cmd_check(const std::string& trace_path, const std::string& problem_path, std::ostream& out,
              std::ostream& err, bool parallel = true);
int cmd_explain(const std::string& problem_path, std::uint64_t step, std::ostream& out,
                std::ostream& err);

// Library forms of the above.

// The structured trace of a run, one JSON record per line, followed by a
// summary record.
std::string structured_trace(const Problem& p, const Outcome& o);
std::string summary_json(const Problem& p, const Outcome& o);

struct CheckReport {
  bool ok = true;
  std::uint64_t steps = 0;
  std::optional<std::uint64_t> failed_step;  // record position of the first failure
  std::string message;
};

// Parses trace text into records, skipping the summary line.
std::vector<TraceRecord> read_trace(const std::string& text);

// Replays step by step with h_step.
CheckReport check_trace_serial(const Problem& p, const std::vector<TraceRecord>& records,
                               std::optional<bool> solved = std::nullopt);
// Rebuilds every predecessor state from the recorded deltas, then re-derives
// the steps independently in parallel.
CheckReport check_trace_parallel(const Problem& p, const std::vector<TraceRecord>& records,
                                 std::optional<bool> solved = std::nullopt);

// Report for step k, or nullopt with a reason in `why`.
std::optional<std::string> explain_step(const Problem& p, std::uint64_t k, std::string& why,
                                        bool& already_solving);

int analyze_case_number(CritKind k);

}  // namespace eps
