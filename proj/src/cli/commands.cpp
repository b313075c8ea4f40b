#include "eps/cli/commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "eps/subst/reduce.hpp"

namespace eps {

namespace {

using Json = nlohmann::ordered_json;

bool is_summary_line(const std::string& line) { return line.rfind("{\"result\"", 0) == 0; }

struct Witness {
  std::string goal;
  std::optional<Natural> n;
  std::string instance;
  bool holds = false;
  std::string error;
};

std::vector<Witness> witnesses(const Problem& p, const Outcome& o) {
  std::vector<Witness> out;
  for (const auto& g : p.goals) {
    Witness w;
    w.goal = "(exists x " + to_surface(g.phi, {"x"}) + ")";
    try {
      w.n = extract_witness(o.final.s, g);
      Expression inst = apply_open(g.phi, num(*w.n));
      w.instance = to_surface(inst, {});
      w.holds = models(o.final.s.extended(), inst);
    } catch (const std::exception& ex) {
      w.error = ex.what();
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::string text_summary(const Problem& p, const Outcome& o) {
  std::ostringstream out;
  switch (o.status) {
    case Status::Solved:
      out << "solved in " << o.step_count << (o.step_count == 1 ? " step\n" : " steps\n");
      break;
    case Status::StepLimit:
      out << "step limit reached after " << o.step_count << " steps\n";
      break;
    case Status::InternalError:
      out << "internal error after " << o.step_count << " steps: " << o.diagnostic << "\n";
      break;
  }
  out << "S = " << o.final.s.str() << "\n";
  out << history_str(o.final.hist) << "\n";
  if (o.status != Status::Solved) return out.str();
  std::size_t i = 0;
  for (const auto& w : witnesses(p, o)) {
    out << "goal " << i++ << " " << w.goal << ": ";
    if (w.n)
      out << "witness " << w.n->str() << ", " << w.instance << (w.holds ? " holds\n" : " fails\n");
    else
      out << "no witness: " << w.error << "\n";
  }
  return out.str();
}

int exit_code(Status s) {
  switch (s) {
    case Status::Solved:
      return kExitSolved;
    case Status::StepLimit:
      return kExitStepLimit;
    case Status::InternalError:
      return kExitInternal;
  }
  return kExitInternal;
}

std::optional<bool> summary_solved(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<bool> out;
  while (std::getline(in, line)) {
    if (!is_summary_line(line)) continue;
    Json j = Json::parse(line);
    out = j.at("result").get<std::string>() == status_name(Status::Solved);
  }
  return out;
}

std::string first_difference(const TraceRecord& want, const TraceRecord& got) {
  return "recorded " + to_json_line(got) + "\n  re-derived " + to_json_line(want);
}

// Verifies one step from its predecessor state; empty string on success.
std::string verify_step(const Problem& p, const HistoricalSubstitution& before,
                        const TraceRecord& rec, std::uint64_t position,
                        HistoricalSubstitution* next) {
  if (rec.step != position)
    return "record at position " + std::to_string(position) + " has step " +
           std::to_string(rec.step);
  if (is_solving(before.s, p.crs)) return "step recorded after the substitution was solving";
  StepResult r = h_step(before, p.crs, p.clause, {true}, position);
  TraceRecord want = to_record(r.record);
  if (!(want == rec)) return first_difference(want, rec);
  auto bad = incorrect_entries(r.next.s, p.clause);
  if (!bad.empty()) return "incorrect entry " + to_string(bad.front().expr());
  auto problems = validate(r.next, p.clause);
  if (!problems.empty()) return problems.front();
  if (next) *next = std::move(r.next);
  return {};
}

CheckReport failure(std::uint64_t step, std::string msg) {
  CheckReport r;
  r.ok = false;
  r.failed_step = step;
  r.message = std::move(msg);
  return r;
}

}  // namespace

int analyze_case_number(CritKind k) {
  switch (k) {
    case CritKind::Pred:
      return 1;
    case CritKind::Epsilon:
      return 2;
    case CritKind::Induction:
      return 3;
    case CritKind::InductiveDef:
      return 4;
    case CritKind::Closure:
      return 5;
  }
  return 0;
}

std::string summary_json(const Problem& p, const Outcome& o) {
  Json j;
  j["result"] = status_name(o.status);
  j["steps"] = o.step_count;
  j["final"] = o.final.s.str();
  std::vector<std::string> order;
  for (const auto& n : o.final.hist.order) order.push_back(n.str());
  j["P"] = order;
  if (!o.diagnostic.empty()) j["diagnostic"] = o.diagnostic;
  if (o.status == Status::Solved) {
    Json ws = Json::array();
    for (const auto& w : witnesses(p, o)) {
      Json x;
      x["goal"] = w.goal;
      if (w.n) {
        x["witness"] = w.n->str();
        x["instance"] = w.instance;
        x["holds"] = w.holds;
      } else {
        x["error"] = w.error;
      }
      ws.push_back(std::move(x));
    }
    j["witnesses"] = std::move(ws);
  }
  return j.dump();
}

std::string structured_trace(const Problem& p, const Outcome& o) {
  std::string out;
  for (const auto& h : o.steps) out += to_json_line(to_record(h)) + "\n";
  return out + summary_json(p, o) + "\n";
}

std::vector<TraceRecord> read_trace(const std::string& text) {
  std::vector<TraceRecord> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || is_summary_line(line)) continue;
    out.push_back(parse_json_line(line));
  }
  return out;
}

CheckReport check_trace_serial(const Problem& p, const std::vector<TraceRecord>& records,
                               std::optional<bool> solved) {
  HistoricalSubstitution hs;
  for (std::uint64_t i = 0; i < records.size(); ++i) {
    std::string msg;
    try {
      msg = verify_step(p, hs, records[i], i, &hs);
    } catch (const std::exception& ex) {
      msg = ex.what();
    }
    if (!msg.empty()) return failure(i, msg);
  }
  if (solved && *solved != is_solving(hs.s, p.crs))
    return failure(records.size(), "summary disagrees with the replayed final state");
  CheckReport r;
  r.steps = records.size();
  return r;
}

CheckReport check_trace_parallel(const Problem& p, const std::vector<TraceRecord>& records,
                                 std::optional<bool> solved) {
  const std::size_t n = records.size();
  std::vector<HistoricalSubstitution> states(1);
  std::optional<CheckReport> replay_error;
  for (std::size_t i = 0; i < n; ++i) {
    try {
      states.push_back(replay_delta(states.back(), records[i]));
    } catch (const std::exception& ex) {
      replay_error = failure(i, std::string("cannot apply recorded deltas: ") + ex.what());
      break;
    }
  }

  const std::size_t built = states.size() - 1;
  std::vector<std::string> errors(built);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(built); ++i) {
    const auto k = static_cast<std::size_t>(i);
    HistoricalSubstitution next;
    try {
      errors[k] = verify_step(p, states[k], records[k], k, &next);
      if (errors[k].empty() && !(next == states[k + 1]))
        errors[k] = "recorded deltas do not reproduce the re-derived state";
    } catch (const std::exception& ex) {
      errors[k] = ex.what();
    }
  }
  for (std::size_t k = 0; k < built; ++k)
    if (!errors[k].empty()) return failure(k, errors[k]);
  if (replay_error) return *replay_error;
  if (solved && *solved != is_solving(states.back().s, p.crs))
    return failure(n, "summary disagrees with the replayed final state");
  CheckReport r;
  r.steps = n;
  return r;
}

std::optional<std::string> explain_step(const Problem& p, std::uint64_t k, std::string& why,
                                        bool& already_solving) {
  already_solving = false;
  HistoricalSubstitution hs;
  if (is_solving(hs.s, p.crs)) {
    already_solving = true;
    return "already solving: no step is taken\n";
  }
  for (std::uint64_t i = 0;; ++i) {
    if (is_solving(hs.s, p.crs)) {
      why = "step " + std::to_string(k) + " out of range: solved after " + std::to_string(i) +
            (i == 1 ? " step" : " steps");
      return std::nullopt;
    }
    StepResult r = h_step(hs, p.crs, p.clause, {}, i);
    if (i == k) {
      const HStep& h = r.record;
      const Analysis& a = h.chosen;
      std::ostringstream out;
      out << "step " << k << "\n";
      out << "chosen Cr" << a.index << ": " << describe(p.crs[a.index]) << "\n";
      out << "analyze case " << analyze_case_number(a.kind) << " (" << crit_kind_name(a.kind) << ")";
      if (a.closure_subcase != 0) out << ", closure sub-case " << a.closure_subcase;
      out << "\n";
      out << "H case " << rank_case_name(h.rank_case) << " (rank " << a.rank().str() << ")\n";
      out << "H-expression " << to_string(a.e->expr()) << "\n";
      out << "H-value " << h.v.str();
      if (!(h.v == a.v)) out << " (proposed " << a.v.str() << ")";
      out << "\n";
      out << "before: S = " << hs.s.str() << "\n        " << history_str(hs.hist) << "\n";
      out << "after:  S = " << r.next.s.str() << "\n        " << history_str(r.next.hist) << "\n";
      out << (h.solving ? "solving after this step\n" : "not yet solving\n");
      return out.str();
    }
    hs = std::move(r.next);
  }
}

namespace {

bool load(const std::string& path, Problem& p, std::ostream& err) {
  try {
    p = load_problem(path);
    return true;
  } catch (const SyntaxError& ex) {
    err << "error: " << path << ":" << ex.what() << "\n";
    return false;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return false;
  }
}

}  // namespace

int cmd_run(const std::string& problem_path, const RunConfig& cfg, std::ostream& out,
            std::ostream& err) {
  Problem p;
  if (!load(problem_path, p, err)) return kExitInput;
  RunLimits limits;
  limits.max_steps = cfg.max_steps.value_or(p.max_steps());
  limits.check = cfg.check;
  limits.keep_steps = false;
  if (limits.max_steps == 0) {
    err << "error: max-steps must be at least 1\n";
    return kExitInput;
  }

  std::ofstream file;
  if (!cfg.trace_path.empty()) {
    file.open(cfg.trace_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << cfg.trace_path << "\n";
      return kExitInput;
    }
  }
  std::ostream& trace = cfg.trace_path.empty() ? out : file;
  const bool structured = cfg.format == Format::Structured;

  Outcome o = run(p.crs, p.clause, limits, [&](const HStep& h) {
    TraceRecord r = to_record(h);
    trace << (structured ? to_json_line(r) + "\n" : to_text(r));
  });

  if (structured) trace << summary_json(p, o) << "\n";
  if (!structured || !cfg.trace_path.empty()) out << text_summary(p, o);
  if (o.status == Status::InternalError) err << "internal error: " << o.diagnostic << "\n";
  return exit_code(o.status);
}

int cmd_check(const std::string& trace_path, const std::string& problem_path, std::ostream& out,
              std::ostream& err, bool parallel) {
  Problem p;
  if (!load(problem_path, p, err)) return kExitInput;
  std::ifstream in(trace_path, std::ios::binary);
  if (!in) {
    err << "error: cannot read " << trace_path << "\n";
    return kExitInput;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  std::vector<TraceRecord> records;
  std::optional<bool> solved;
  try {
    records = read_trace(buf.str());
    solved = summary_solved(buf.str());
  } catch (const std::exception& ex) {
    err << "error: " << trace_path << ": " << ex.what() << "\n";
    return kExitInput;
  }
  CheckReport r = parallel ? check_trace_parallel(p, records, solved)
                           : check_trace_serial(p, records, solved);
  if (!r.ok) {
    err << "check failed at step " << *r.failed_step << ": " << r.message << "\n";
    return kExitCheckFailed;
  }
  out << "ok: " << r.steps << (r.steps == 1 ? " step verified\n" : " steps verified\n");
  return 0;
}

int cmd_explain(const std::string& problem_path, std::uint64_t step, std::ostream& out,
                std::ostream& err) {
  Problem p;
  if (!load(problem_path, p, err)) return kExitInput;
  std::string why;
  bool solving = false;
  try {
    auto report = explain_step(p, step, why, solving);
    if (!report) {
      err << "error: " << why << "\n";
      return kExitInput;
    }
    out << *report;
    return 0;
  } catch (const std::exception& ex) {
    err << "internal error: " << ex.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace eps
