#include "eps/cli/batch.hpp"

#include <omp.h>

#include "eps/cli/commands.hpp"

namespace eps {

namespace {

BatchResult run_one(const Problem& p, RunLimits limits) {
  limits.keep_steps = true;
  try {
    Outcome o = run(p.crs, p.clause, limits);
    return {o.status, o.step_count, structured_trace(p, o), o.diagnostic};
  } catch (const std::exception& ex) {
    return {Status::InternalError, 0, {}, ex.what()};
  }
}

}  // namespace

std::vector<BatchResult> run_batch_serial(const std::vector<Problem>& problems,
                                          const RunLimits& limits) {
  std::vector<BatchResult> out;
  out.reserve(problems.size());
  for (const auto& p : problems) out.push_back(run_one(p, limits));
  return out;
}

std::vector<BatchResult> run_batch_parallel(const std::vector<Problem>& problems,
                                            const RunLimits& limits) {
  std::vector<BatchResult> out(problems.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(problems.size()); ++i) {
    const auto k = static_cast<std::size_t>(i);
    out[k] = run_one(problems[k], limits);
  }
  return out;
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace eps
