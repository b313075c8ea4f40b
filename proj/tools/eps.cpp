#include <iostream>

#include <CLI11.hpp>

#include "eps/cli/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"eps: epsilon-substitution engine for ID1"};
  app.require_subcommand(1);

  eps::RunConfig cfg;
  std::string problem;
  std::uint64_t max_steps = 0;
  std::string format = "text";
  std::int64_t explain = -1;
  auto* run = app.add_subcommand("run", "run the H-process on a problem file");
  run->add_option("file", problem, "problem file")->required();
  auto* max_opt = run->add_option("--max-steps", max_steps, "step limit (default 1000000)")
                      ->check(CLI::PositiveNumber);
  run->add_flag("--check", cfg.check, "check correctness and history after every step");
  run->add_option("--trace", cfg.trace_path, "write the trace to this file");
  run->add_option("--format", format, "trace format")
      ->check(CLI::IsMember({"text", "structured"}));
  run->add_option("--explain", explain, "explain step K instead of running")
      ->check(CLI::NonNegativeNumber);

  std::string trace;
  std::string check_problem;
  bool serial = false;
  auto* check = app.add_subcommand("check", "replay a structured trace against its problem");
  check->add_option("trace", trace, "trace file")->required();
  check->add_option("file", check_problem, "problem file")->required();
  check->add_flag("--serial", serial, "replay sequentially");

  std::string explain_problem;
  std::uint64_t step = 0;
  auto* expl = app.add_subcommand("explain", "report the case analysis of one step");
  expl->add_option("file", explain_problem, "problem file")->required();
  expl->add_option("step", step, "step index")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : eps::kExitInput;
  }

  if (*run) {
    if (explain >= 0)
      return eps::cmd_explain(problem, static_cast<std::uint64_t>(explain), std::cout, std::cerr);
    if (*max_opt) cfg.max_steps = max_steps;
    cfg.format = format == "structured" ? eps::Format::Structured : eps::Format::Text;
    return eps::cmd_run(problem, cfg, std::cout, std::cerr);
  }
  if (*check) return eps::cmd_check(trace, check_problem, std::cout, std::cerr, !serial);
  return eps::cmd_explain(explain_problem, step, std::cout, std::cerr);
}
