#include "corpus.hpp"

#include <algorithm>
#include <random>

#include "eps/lang/expr.hpp"
#include "eps/lang/sexpr.hpp"
#include "oracle.hpp"

namespace corpus {

namespace {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(int percent) { return pick(0, 99) < percent; }
  std::string k(int lo, int hi) { return std::to_string(pick(lo, hi)); }

  // phi(x) over the PA signature only.
  std::string pa_phi(bool allow_some) {
    switch (pick(0, allow_some ? 8 : 7)) {
      case 0:
        return "(= x " + k(0, 6) + ")";
      case 1:
        return "(= (+ x " + k(0, 3) + ") " + k(0, 7) + ")";
      case 2:
        return "(< " + k(0, 5) + " x)";
      case 3: {
        int a = pick(0, 3);
        return "(and (< " + std::to_string(a) + " x) (< x " + std::to_string(a + pick(1, 4)) + "))";
      }
      case 4:
        return "(= (* x " + k(1, 3) + ") " + k(0, 9) + ")";
      case 5:
        return "(not (< x " + k(0, 5) + "))";
      case 6:
        return "(= (s x) " + k(1, 6) + ")";
      case 7:
        return "(or (= x " + k(0, 4) + ") (< " + k(2, 6) + " x))";
      default:
        return "(= (some z (= z (s x))) " + k(1, 5) + ")";
    }
  }

  std::string closed_term(int depth) {
    switch (depth > 0 ? pick(0, 5) : pick(0, 1)) {
      case 0:
      case 1:
        return k(0, 6);
      case 2:
        return "(s " + closed_term(depth - 1) + ")";
      case 3:
        return "(+ " + closed_term(depth - 1) + " " + k(0, 3) + ")";
      default: {
        std::string phi = pa_phi(false);
        for (auto& ch : phi)
          if (ch == 'x') ch = 'z';
        return "(some z " + phi + ")";
      }
    }
  }

  // phi(x) for induction: phi(0) tends to hold and phi(t) to fail.
  std::string ind_phi() {
    switch (pick(0, 2)) {
      case 0:
        return "(< x " + k(1, 5) + ")";
      case 1:
        return "(not (= x " + k(1, 5) + "))";
      default:
        return "(< (+ x " + k(0, 2) + ") " + k(2, 6) + ")";
    }
  }

  std::string pa_crit() {
    switch (pick(0, 9)) {
      case 0:
      case 1:
        return "(crit pred " + closed_term(2) + ")";
      case 2:
      case 3:
        return "(crit ind " + closed_term(1) + " (x " + ind_phi() + "))";
      default:
        return "(crit eps " + closed_term(2) + " (exists x " + pa_phi(true) + "))";
    }
  }

  // A PA goal with a numeral making phi true, or empty when none is small.
  std::string pa_goal() {
    for (int tries = 0; tries < 8; ++tries) {
      std::string phi = pa_phi(false);
      eps::Problem p = eps::parse_problem("(goal (exists x " + phi + "))");
      const eps::Goal& g = p.goals.front();
      for (int n = 0; n <= 12; ++n) {
        eps::Expression inst = eps::apply_open(g.phi, eps::num(n));
        if (oracle::eval_closed_pa(inst))
          return "(goal (exists x " + phi + ") " + std::to_string(n) + ")";
      }
    }
    return {};
  }

  std::string closure_phi() {
    switch (pick(0, 2)) {
      case 0:
        return "(< x " + k(1, 4) + ")";
      case 1:
        return "(not (= x " + k(1, 4) + "))";
      default:
        return "(or (< x " + k(1, 2) + ") (= x " + k(3, 4) + "))";
    }
  }

  // A closure axiom with epsilon axioms naming the Skolem terms it consults:
  // a member of I outside phi, and a counterexample to A(k, phi).
  std::vector<std::string> closure_group() {
    std::string phi = closure_phi();
    std::string phi_w = phi;
    for (auto& ch : phi_w)
      if (ch == 'x') ch = 'w';
    std::vector<std::string> out{"(crit closure (x " + phi + "))",
                                 "(crit eps " + k(0, 5) + " (exists x (not (-> (in x I) " + phi + "))))"};
    if (coin(70))
      out.push_back("(crit eps " + k(0, 3) + " (exists z (not (B z " + k(1, 5) + " w " + phi_w + "))))");
    return out;
  }

  std::string id_crit() {
    switch (pick(0, 13)) {
      case 0:
      case 1:
      case 2:
        return "(crit inddef " + k(0, 4) + ")";
      case 3:
        return "(crit inddef " + closed_term(1) + ")";
      case 4:
      case 5:
        return "(crit closure (x " + closure_phi() + "))";
      case 6:
        return "(crit eps " + k(0, 4) + " (exists x (in x I)))";
      case 7:
        return "(crit eps " + k(0, 4) + " (exists x (not (-> (in x I) (< x " + k(1, 3) + ")))))";
      case 8:
        return "(crit eps " + k(0, 3) + " (exists z (not (B z " + k(1, 4) + " w (< w " + k(1, 3) +
               ")))))";
      case 9:
        return "(crit eps " + k(0, 4) + " (exists x (and (in x I) (< " + k(0, 2) + " x))))";
      case 10:
      case 11:
        // a counterexample to A(k, I): the rank-Omega witness c_k
        return "(crit eps " + k(0, 3) + " (exists z (not (B z " + k(0, 5) + "))))";
      default:
        return pa_crit();
    }
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

std::string header(const std::string& name) { return "; " + name + "\n"; }

}  // namespace

std::vector<Entry> generate(std::uint64_t seed, std::size_t count) {
  Gen g(seed);
  std::vector<Entry> out;
  out.reserve(count);
  const char* clauses[] = {kClauseAll, kClausePred, kClauseBounded};
  const char* clause_names[] = {"all", "pred", "bounded"};
  for (std::size_t i = 0; i < count; ++i) {
    Entry e;
    std::string body;
    bool pa = i % 5 < 2;
    if (pa) {
      e.name = "pa-" + std::to_string(i);
      int n = g.pick(1, 7);
      for (int j = 0; j < n; ++j) body += g.pa_crit() + "\n";
    } else {
      int c = g.pick(0, 2);
      e.name = std::string("id1-") + clause_names[c] + "-" + std::to_string(i);
      body += std::string("(clause (y x) ") + clauses[c] + ")\n";
      std::vector<std::string> crits;
      if (g.coin(50)) {
        int top = g.pick(1, 5);
        for (int m = 0; m <= top; ++m) crits.push_back("(crit inddef " + std::to_string(m) + ")");
      }
      if (g.coin(40))
        for (auto& c : g.closure_group()) crits.push_back(std::move(c));
      int n = g.pick(2, 7);
      for (int j = 0; j < n; ++j) crits.push_back(g.id_crit());
      std::shuffle(crits.begin(), crits.end(), g.rng());
      for (const auto& c : crits) body += c + "\n";
      if (g.coin(30)) body += "(crit inddef 0)\n(goal (exists x (in x I)) 0)\n";
    }
    int goals = g.pick(0, 2);
    for (int j = 0; j < goals; ++j) {
      std::string goal = g.pa_goal();
      if (!goal.empty()) body += goal + "\n";
    }
    e.text = header(e.name) + body;
    e.problem = eps::parse_problem(e.text);
    e.pa_only = pa;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace corpus
