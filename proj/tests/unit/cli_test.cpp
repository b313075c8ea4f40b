#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "eps/cli/batch.hpp"
#include "eps/cli/commands.hpp"
#include "util.hpp"

using namespace eps;
using testutil::problem_path;

namespace {

struct Captured {
  int code;
  std::string out;
  std::string err;
};

Captured run_file(const std::string& path, RunConfig cfg = {}) {
  std::ostringstream out, err;
  int code = cmd_run(path, cfg, out, err);
  return {code, out.str(), err.str()};
}

Captured check_file(const std::string& trace, const std::string& problem, bool parallel = true) {
  std::ostringstream out, err;
  int code = cmd_check(trace, problem, out, err, parallel);
  return {code, out.str(), err.str()};
}

Captured explain(const std::string& path, std::uint64_t step) {
  std::ostringstream out, err;
  int code = cmd_explain(path, step, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("eps_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void spit(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string join(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

std::string structured_trace_of(const std::string& name, const TempDir& dir) {
  RunConfig cfg;
  cfg.format = Format::Structured;
  cfg.trace_path = dir.file(name + ".jsonl");
  REQUIRE(run_file(problem_path(name), cfg).code == kExitSolved);
  return cfg.trace_path;
}

}  // namespace

TEST_CASE("run reports solutions and witnesses") {
  Captured c = run_file(problem_path("epsilon"));
  CHECK(c.code == kExitSolved);
  CHECK(c.out.find("solved in 1 step") != std::string::npos);
  CHECK(c.out.find("witness 1") != std::string::npos);

  Captured e = run_file(problem_path("empty"));
  CHECK(e.code == kExitSolved);
  CHECK(e.out.find("solved in 0 steps") != std::string::npos);
}

TEST_CASE("run exit codes") {
  RunConfig one;
  one.max_steps = 1;
  Captured limit = run_file(problem_path("two_steps"), one);
  CHECK(limit.code == kExitStepLimit);

  Captured missing = run_file("/nonexistent/problem.eps");
  CHECK(missing.code == kExitInput);
  CHECK(missing.err.find("cannot read") != std::string::npos);

  TempDir dir;
  spit(dir.file("bad.eps"), "(crit eps 1\n  (exists x (= x 1))");
  Captured bad = run_file(dir.file("bad.eps"));
  CHECK(bad.code == kExitInput);
  CHECK(bad.err.find(dir.file("bad.eps")) != std::string::npos);

  RunConfig zero;
  zero.max_steps = 0;
  CHECK(run_file(problem_path("epsilon"), zero).code == kExitInput);

  RunConfig checked;
  checked.check = true;
  CHECK(run_file(problem_path("rollback"), checked).code == kExitSolved);
}

TEST_CASE("problem option bounds the run") {
  TempDir dir;
  spit(dir.file("p.eps"), "(option max-steps 1)\n" + slurp(problem_path("two_steps")));
  CHECK(run_file(dir.file("p.eps")).code == kExitStepLimit);
  RunConfig more;
  more.max_steps = 5;
  CHECK(run_file(dir.file("p.eps"), more).code == kExitSolved);
}

TEST_CASE("structured traces replay") {
  TempDir dir;
  for (const char* name : {"epsilon", "inddef", "two_steps", "rollback", "closure", "closure_rollback"}) {
    CAPTURE(name);
    std::string trace = structured_trace_of(name, dir);
    CHECK(check_file(trace, problem_path(name), false).code == kExitSolved);
    CHECK(check_file(trace, problem_path(name), true).code == kExitSolved);
  }
}

TEST_CASE("check rejects a tampered value") {
  TempDir dir;
  std::string trace = structured_trace_of("rollback", dir);
  auto lines = lines_of(slurp(trace));
  REQUIRE(lines.size() > 3);
  auto& line = lines[3];
  auto pos = line.find("\"v\":\"top\"");
  REQUIRE(pos != std::string::npos);
  line.replace(pos, 9, "\"v\":\"?\"");
  spit(trace, join(lines));
  for (bool parallel : {false, true}) {
    Captured c = check_file(trace, problem_path("rollback"), parallel);
    CHECK(c.code == kExitCheckFailed);
    CHECK(c.err.find("step 3") != std::string::npos);
  }
}

TEST_CASE("check rejects reordered steps") {
  TempDir dir;
  std::string trace = structured_trace_of("rollback", dir);
  auto lines = lines_of(slurp(trace));
  std::swap(lines[1], lines[2]);
  spit(trace, join(lines));
  CHECK(check_file(trace, problem_path("rollback"), false).code != kExitSolved);
  CHECK(check_file(trace, problem_path("rollback"), true).code != kExitSolved);
}

TEST_CASE("check rejects a truncated trace and a wrong summary") {
  TempDir dir;
  std::string trace = structured_trace_of("inddef", dir);
  auto lines = lines_of(slurp(trace));
  REQUIRE(lines.size() == 3);
  spit(trace, join({lines[0], lines[2]}));
  CHECK(check_file(trace, problem_path("inddef")).code != kExitSolved);
  spit(trace, "not json\n");
  CHECK(check_file(trace, problem_path("inddef")).code == kExitInput);
  CHECK(check_file(dir.file("absent.jsonl"), problem_path("inddef")).code == kExitInput);
}

TEST_CASE("explain") {
  Captured c = explain(problem_path("inddef"), 0);
  CHECK(c.code == kExitSolved);
  CHECK(c.out.find("case 4") != std::string::npos);
  CHECK(c.out.find("OmegaPos") != std::string::npos);

  Captured late = explain(problem_path("epsilon"), 7);
  CHECK(late.code == kExitInput);
  CHECK(late.err.find("range") != std::string::npos);

  Captured done = explain(problem_path("empty"), 0);
  CHECK(done.code == kExitSolved);
  CHECK(done.out.find("already solving") != std::string::npos);

  Captured neg = explain(problem_path("closure_rollback"), 4);
  CHECK(neg.out.find("OmegaNeg") != std::string::npos);
  CHECK(neg.out.find("closure") != std::string::npos);
}

TEST_CASE("structured traces are deterministic") {
  Problem p = load_problem(problem_path("rollback"));
  Outcome a = run(p.crs, p.clause);
  Outcome b = run(p.crs, p.clause);
  CHECK(structured_trace(p, a) == structured_trace(p, b));
  auto records = read_trace(structured_trace(p, a));
  CHECK(records.size() == a.step_count);
  CHECK(check_trace_serial(p, records, true).ok);
  CHECK(check_trace_parallel(p, records, true).ok);
  CHECK_FALSE(check_trace_serial(p, records, false).ok);
}

TEST_CASE("batch runners agree") {
  std::vector<Problem> ps;
  for (const char* name : {"empty", "epsilon", "inddef", "two_steps", "rollback", "closure", "closure_rollback"})
    ps.push_back(load_problem(problem_path(name)));
  RunLimits lim;
  auto serial = run_batch_serial(ps, lim);
  auto parallel = run_batch_parallel(ps, lim);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    CHECK(serial[i].status == Status::Solved);
    CHECK(serial[i].trace == parallel[i].trace);
    CHECK(serial[i].steps == parallel[i].steps);
  }
  CHECK(max_threads() >= 1);
}
