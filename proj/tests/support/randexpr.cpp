#include "randexpr.hpp"

#include <memory>

#include "eps/lang/skolem.hpp"
#include "eps/subst/reduce.hpp"

namespace randexpr {

Expression Gen::term(int depth, std::uint32_t nvars, bool allow_i) {
  int choice = depth <= 0 ? pick(0, 1) : pick(0, 6);
  switch (choice) {
    case 0:
      if (nvars > 0 && coin(60)) return eps::var(static_cast<std::uint32_t>(pick(0, nvars - 1)));
      return eps::num(pick(0, 4));
    case 1:
      return eps::num(pick(0, 4));
    case 2:
      return eps::succ(term(depth - 1, nvars, allow_i));
    case 3:
      return eps::add(term(depth - 1, nvars, allow_i), term(depth - 1, nvars, allow_i));
    default: {
      // exists z. body(z, outer variables)
      Expression body = formula(depth - 1, nvars + 1, allow_i);
      return eps::skolem_term_for(body, nvars);
    }
  }
}

Expression Gen::formula(int depth, std::uint32_t nvars, bool allow_i) {
  auto bound = [&] {
    // keep the most recent variable in play so Skolem bodies mention it
    return nvars > 0 && coin(70) ? eps::var(nvars - 1) : term(depth - 1, nvars, allow_i);
  };
  int choice = depth <= 0 ? pick(0, allow_i ? 2 : 1) : pick(0, allow_i ? 5 : 4);
  switch (choice) {
    case 0:
      return eps::eq(bound(), term(depth - 1, nvars, allow_i));
    case 1:
      return eps::lt(term(depth - 1, nvars, allow_i), bound());
    case 2:
      if (allow_i) return eps::in_i(bound());
      return eps::neg(formula(depth - 1, nvars, allow_i));
    case 3:
      return eps::neg(formula(depth - 1, nvars, allow_i));
    case 4:
      return eps::conj(formula(depth - 1, nvars, allow_i), formula(depth - 1, nvars, allow_i));
    default:
      return eps::disj(formula(depth - 1, nvars, allow_i), formula(depth - 1, nvars, allow_i));
  }
}

eps::Value Gen::value_for(const CanonicalExpression& e) {
  if (e.is_formula()) return coin(50) ? eps::Value::top() : eps::Value::unknown();
  if (coin(20)) return eps::Value::unknown();
  return eps::Value::number(pick(1, 5));
}

eps::Rank max_rank(const Expression& e) {
  eps::Rank best = eps::Rank::fin(0);
  if (e.kind() == eps::Kind::Skolem || e.kind() == eps::Kind::InI) best = eps::rank(e);
  for (const auto& k : e.children()) {
    eps::Rank r = max_rank(k);
    if (best < r) best = r;
  }
  return best;
}

std::vector<CanonicalExpression> consulted(const Expression& e, const EpsilonSubstitution& s) {
  auto log = std::make_shared<eps::LookupLog>();
  EpsilonSubstitution rec = s.recording(log);
  if (e.is_term())
    eps::reduce_term(e, rec);
  else
    eps::reduce_formula(e, rec);
  return log->keys;
}

EpsilonSubstitution random_over(Gen& g, const std::vector<Expression>& exprs, int rounds) {
  EpsilonSubstitution s;
  for (int r = 0; r < rounds; ++r) {
    EpsilonSubstitution ext = s.extended();
    for (const auto& e : exprs)
      for (const auto& k : consulted(e, ext))
        if (!s.contains(k) && g.coin(70)) s = s.with(k, g.value_for(k));
  }
  return s;
}

}  // namespace randexpr
