#include "eps/hproc/trace.hpp"

#include <json.hpp>

#include "eps/lang/sexpr.hpp"

namespace eps {

namespace {

using Json = nlohmann::ordered_json;

std::vector<TraceRecord::Pair> entry_strings(const std::vector<EpsilonSubstitution::Entry>& xs) {
  std::vector<TraceRecord::Pair> out;
  out.reserve(xs.size());
  for (const auto& [e, v] : xs) out.emplace_back(to_string(e.expr()), v.str());
  return out;
}

Json pairs_json(const std::vector<TraceRecord::Pair>& xs) {
  Json out = Json::array();
  for (const auto& [a, b] : xs) out.push_back(Json::array({a, b}));
  return out;
}

std::vector<TraceRecord::Pair> pairs_from(const Json& j) {
  std::vector<TraceRecord::Pair> out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) throw std::invalid_argument("expected a pair");
    out.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  }
  return out;
}

}  // namespace

TraceRecord to_record(const HStep& h) {
  TraceRecord r;
  r.step = h.step;
  r.index = h.chosen.index;
  r.crit = crit_kind_name(h.chosen.kind);
  r.closure_case = h.chosen.closure_subcase;
  r.rank_case = rank_case_name(h.rank_case);
  r.rank = h.chosen.rank().str();
  r.e = to_string(h.chosen.e->expr());
  r.v = h.v.str();
  r.added = entry_strings(h.added);
  r.removed = entry_strings(h.removed);
  for (const auto& n : h.order) r.order.push_back(n.str());
  for (const auto& [n, sub] : h.v_added) r.v_added.emplace_back(n.str(), sub.str());
  for (const auto& n : h.v_removed) r.v_removed.push_back(n.str());
  r.solving = h.solving;
  return r;
}

std::string to_json_line(const TraceRecord& r) {
  Json j;
  j["step"] = r.step;
  j["I"] = r.index;
  j["crit"] = r.crit;
  if (r.closure_case != 0) j["closureCase"] = r.closure_case;
  j["rankCase"] = r.rank_case;
  j["rank"] = r.rank;
  j["e"] = r.e;
  j["v"] = r.v;
  j["addedEntries"] = pairs_json(r.added);
  j["removedEntries"] = pairs_json(r.removed);
  j["P"] = r.order;
  j["Vdelta"] = {{"added", pairs_json(r.v_added)}, {"removed", r.v_removed}};
  j["solving"] = r.solving;
  return j.dump();
}

TraceRecord parse_json_line(const std::string& line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("bad trace line: ") + ex.what());
  }
  try {
    TraceRecord r;
    r.step = j.at("step").get<std::uint64_t>();
    r.index = j.at("I").get<std::uint64_t>();
    r.crit = j.at("crit").get<std::string>();
    r.closure_case = j.value("closureCase", 0);
    r.rank_case = j.at("rankCase").get<std::string>();
    r.rank = j.at("rank").get<std::string>();
    r.e = j.at("e").get<std::string>();
    r.v = j.at("v").get<std::string>();
    r.added = pairs_from(j.at("addedEntries"));
    r.removed = pairs_from(j.at("removedEntries"));
    r.order = j.at("P").get<std::vector<std::string>>();
    r.v_added = pairs_from(j.at("Vdelta").at("added"));
    r.v_removed = j.at("Vdelta").at("removed").get<std::vector<std::string>>();
    r.solving = j.at("solving").get<bool>();
    return r;
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("bad trace record: ") + ex.what());
  }
}

std::string to_text(const TraceRecord& r) {
  std::string out = "step " + std::to_string(r.step) + ": Cr" + std::to_string(r.index) + " (" +
                    r.crit;
  if (r.closure_case != 0) out += " case " + std::to_string(r.closure_case);
  out += ") " + r.rank_case + " rank " + r.rank + "\n";
  out += "  set " + r.e + " := " + r.v + "\n";
  for (const auto& [e, v] : r.removed) out += "  - " + e + " " + v + "\n";
  for (const auto& [e, v] : r.added) out += "  + " + e + " " + v + "\n";
  out += "  P = [";
  for (std::size_t i = 0; i < r.order.size(); ++i) out += (i ? " " : "") + r.order[i];
  out += "]\n";
  for (const auto& [n, s] : r.v_added) out += "  V(" + n + ") = " + s + "\n";
  for (const auto& n : r.v_removed) out += "  V(" + n + ") dropped\n";
  out += r.solving ? "  solving\n" : "";
  return out;
}

HistoricalSubstitution replay_delta(const HistoricalSubstitution& before, const TraceRecord& r) {
  HistoricalSubstitution out = before;
  for (const auto& [e, v] : r.removed)
    out.s = out.s.without(CanonicalExpression(parse_expression(e)));
  for (const auto& [e, v] : r.added)
    out.s = out.s.with(CanonicalExpression(parse_expression(e)), Value::parse(v));
  out.hist.order.clear();
  for (const auto& n : r.order) out.hist.order.emplace_back(n);
  for (const auto& n : r.v_removed) out.hist.removed.erase(Natural(n));
  for (const auto& [n, s] : r.v_added) out.hist.removed.insert_or_assign(Natural(n), parse_substitution(s));
  return out;
}

}  // namespace eps
