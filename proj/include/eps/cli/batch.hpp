#pragma once

#include <string>
#include <vector>

#include "eps/frontend/problem.hpp"
#include "eps/hproc/process.hpp"

namespace eps {

struct BatchResult {
  Status status = Status::Solved;
  std::uint64_t steps = 0;
  std::string trace;  // structured trace including the summary line
  std::string diagnostic;
};

// Runs every problem to completion. The serial form is the reference; the
// parallel form distributes problems over OpenMP threads and must agree with
// it exactly.
std::vector<BatchResult> run_batch_serial(const std::vector<Problem>& problems,
                                          const RunLimits& limits);
std::vector<BatchResult> run_batch_parallel(const std::vector<Problem>& problems,
                                            const RunLimits& limits);

int max_threads();

}  // namespace eps
