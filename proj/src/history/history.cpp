#include "eps/history/history.hpp"

#include <algorithm>
#include <set>

#include "eps/subst/reduce.hpp"

namespace eps {

bool History::contains(const Natural& n) const {
  return std::find(order.begin(), order.end(), n) != order.end();
}

History History::prefix_without(const Natural& n) const {
  History out;
  for (const auto& m : order) {
    if (m == n) break;
    out.order.push_back(m);
    if (auto it = removed.find(m); it != removed.end()) out.removed.emplace(m, it->second);
  }
  return out;
}

bool is_admissible(const std::vector<Natural>& order, const InductiveClause& clause) {
  EpsilonSubstitution before;
  for (const auto& n : order) {
    if (!models(before.extended(), clause.instance(num(0), num(n)))) return false;
    before = before.with(canon_form(n), Value::top());
  }
  return true;
}

std::vector<std::string> validate(const HistoricalSubstitution& hs, const InductiveClause& clause) {
  std::vector<std::string> out;
  const auto& order = hs.hist.order;

  std::set<Natural> in_p(order.begin(), order.end());
  if (in_p.size() != order.size()) out.push_back("P contains a repeated formula");

  std::set<Natural> forms;
  for (const auto& [e, v] : hs.s.positive_form_omega()) forms.insert(e.numeral_arg());
  if (forms != in_p) out.push_back("P does not order S^{+,form}");

  std::set<Natural> in_v;
  for (const auto& [n, sub] : hs.hist.removed) {
    in_v.insert(n);
    for (const auto& [e, v] : sub) {
      if (!is_negative_omega(e, v)) {
        out.push_back("V not negative-Omega at " + n.str());
        break;
      }
    }
  }
  if (in_v != in_p) out.push_back("dom(V) differs from P");

  if (!is_admissible(order, clause)) out.push_back("P is not admissible");
  return out;
}

std::string history_str(const History& h) {
  std::string out = "P=[";
  for (std::size_t i = 0; i < h.order.size(); ++i) {
    if (i) out += ' ';
    out += h.order[i].str();
  }
  out += "] V={";
  bool first = true;
  for (const auto& n : h.order) {
    auto it = h.removed.find(n);
    if (it == h.removed.end()) continue;
    if (!first) out += ' ';
    first = false;
    out += n.str() + ":" + it->second.str();
  }
  return out + "}";
}

}  // namespace eps
