// Times the serial and OpenMP batch runner and trace checker on the same
// workload and verifies that both give identical results.
#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <iomanip>
#include <iostream>

#include "corpus.hpp"
#include "eps/cli/batch.hpp"
#include "eps/cli/commands.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    auto t0 = Clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(Clock::now() - t0).count());
  }
  return best;
}

void row(const std::string& what, double serial, double parallel) {
  std::cout << std::left << std::setw(14) << what << std::right << std::fixed << std::setprecision(4)
            << std::setw(10) << serial << std::setw(10) << parallel << std::setw(9)
            << std::setprecision(2) << serial / parallel << "x\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP batch runner and trace checker"};
  std::string dir = EPS_PROBLEMS_DIR;
  std::size_t generated = 240;
  int repeat = 4;
  int reps = 3;
  app.add_option("--problems", dir, "directory of .eps files");
  app.add_option("--generated", generated, "number of generated problems to add");
  app.add_option("--repeat", repeat, "copies of the workload")->check(CLI::PositiveNumber);
  app.add_option("--reps", reps, "timed repetitions; the best is reported")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  std::vector<eps::Problem> base;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".eps") base.push_back(eps::load_problem(entry.path().string()));
  for (auto& e : corpus::generate(corpus::kDefaultSeed, generated)) base.push_back(std::move(e.problem));
  std::vector<eps::Problem> problems;
  for (int r = 0; r < repeat; ++r) problems.insert(problems.end(), base.begin(), base.end());

  eps::RunLimits limits;
  limits.max_steps = 10'000;
  std::vector<eps::BatchResult> serial, parallel;
  double run_s = best_of(reps, [&] { serial = eps::run_batch_serial(problems, limits); });
  double run_p = best_of(reps, [&] { parallel = eps::run_batch_parallel(problems, limits); });

  std::uint64_t steps = 0;
  bool agree = serial.size() == parallel.size();
  for (std::size_t i = 0; agree && i < serial.size(); ++i) {
    agree = serial[i].status == parallel[i].status && serial[i].trace == parallel[i].trace;
    steps += serial[i].steps;
  }

  std::vector<std::vector<eps::TraceRecord>> traces;
  for (const auto& r : serial) traces.push_back(eps::read_trace(r.trace));
  bool checks_ok = true;
  auto check_all = [&](auto&& checker) {
    for (std::size_t i = 0; i < problems.size(); ++i)
      checks_ok &= checker(problems[i], traces[i], serial[i].status == eps::Status::Solved).ok;
  };
  double check_s = best_of(reps, [&] { check_all(eps::check_trace_serial); });
  double check_p = best_of(reps, [&] { check_all(eps::check_trace_parallel); });

  std::cout << problems.size() << " problems, " << steps << " steps, " << eps::max_threads()
            << " OpenMP threads\n";
  std::cout << std::left << std::setw(14) << "kernel" << std::right << std::setw(10) << "serial s"
            << std::setw(10) << "omp s" << std::setw(10) << "speedup\n";
  row("batch run", run_s, run_p);
  row("trace check", check_s, check_p);
  std::cout << "results identical: " << (agree ? "yes" : "NO") << "\n";
  std::cout << "all traces replay: " << (checks_ok ? "yes" : "NO") << "\n";
  return agree && checks_ok ? 0 : 1;
}
