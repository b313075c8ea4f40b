#include "eps/subst/substitution.hpp"

#include <algorithm>

#include "eps/lang/sexpr.hpp"

namespace eps {

bool CanonicalExpression::is_canonical(const Expression& e) {
  if (e.null()) return false;
  if (e.kind() == Kind::InI) return e.child(0).is_numeral();
  if (e.kind() == Kind::Skolem)
    return std::all_of(e.children().begin(), e.children().end(),
                       [](const Expression& a) { return a.is_numeral(); });
  return false;
}

CanonicalExpression::CanonicalExpression(Expression e) : e_(std::move(e)) {
  if (!is_canonical(e_)) throw SubstitutionError("not a canonical expression: " + to_string(e_));
}

const Natural& CanonicalExpression::numeral_arg() const {
  if (e_.children().size() != 1) throw SubstitutionError("expected a unary canonical expression");
  return e_.child(0).numeral();
}

std::vector<Expression> CanonicalExpression::args() const {
  return {e_.children().begin(), e_.children().end()};
}

CanonicalExpression canon_form(Natural n) { return CanonicalExpression(in_i(num(std::move(n)))); }

std::string Value::str() const {
  switch (tag_) {
    case Tag::Num:
      return n_.str();
    case Tag::Top:
      return "top";
    case Tag::Unknown:
      return "?";
  }
  return "?";
}

Value Value::parse(const std::string& s) {
  if (s == "?") return unknown();
  if (s == "top") return top();
  if (is_natural_literal(s)) return number(Natural(s));
  throw SubstitutionError("bad value '" + s + "'");
}

bool is_positive_omega(const CanonicalExpression& e, const Value& v) {
  if (e.rank() != Rank::omega()) return false;
  return e.is_formula() ? v.is_top() : v.is_unknown();
}

bool is_negative_omega(const CanonicalExpression& e, const Value& v) {
  if (e.rank() != Rank::omega()) return false;
  return e.is_formula() ? v.is_unknown() : v.is_num();
}

EpsilonSubstitution::EpsilonSubstitution() : map_(std::make_shared<const Map>()) {}

EpsilonSubstitution EpsilonSubstitution::extended() const {
  EpsilonSubstitution s = *this;
  s.lazy_ = true;
  return s;
}

EpsilonSubstitution EpsilonSubstitution::strict() const {
  EpsilonSubstitution s = *this;
  s.lazy_ = false;
  return s;
}

EpsilonSubstitution EpsilonSubstitution::recording(std::shared_ptr<LookupLog> log) const {
  EpsilonSubstitution s = *this;
  s.log_ = std::move(log);
  return s;
}

std::optional<Value> EpsilonSubstitution::lookup(const CanonicalExpression& e) const {
  if (log_) log_->add(e);
  if (const Value* v = find(e)) return *v;
  if (lazy_) return Value::unknown();
  return std::nullopt;
}

const Value* EpsilonSubstitution::find(const CanonicalExpression& e) const {
  auto it = map_->find(e);
  return it == map_->end() ? nullptr : &it->second;
}

EpsilonSubstitution EpsilonSubstitution::with(const CanonicalExpression& e, const Value& v) const {
  if (e.is_term()) {
    if (v.is_top()) throw SubstitutionError("top assigned to term " + to_string(e.expr()));
    if (v.is_num() && v.n() == 0)
      throw ZeroValueError("canonical term " + to_string(e.expr()) + " assigned 0");
  } else if (v.is_num()) {
    throw SubstitutionError("numeral assigned to formula " + to_string(e.expr()));
  }
  auto m = std::make_shared<Map>(*map_);
  m->insert_or_assign(e, v);
  EpsilonSubstitution s(std::move(m), lazy_);
  s.log_ = log_;
  return s;
}

EpsilonSubstitution EpsilonSubstitution::without(const CanonicalExpression& e) const {
  if (!contains(e)) return *this;
  auto m = std::make_shared<Map>(*map_);
  m->erase(e);
  EpsilonSubstitution s(std::move(m), lazy_);
  s.log_ = log_;
  return s;
}

EpsilonSubstitution EpsilonSubstitution::filter(
    const std::function<bool(const CanonicalExpression&, const Value&)>& keep) const {
  auto m = std::make_shared<Map>();
  for (const auto& [e, v] : *map_)
    if (keep(e, v)) m->emplace_hint(m->end(), e, v);
  EpsilonSubstitution s(std::move(m), lazy_);
  s.log_ = log_;
  return s;
}

EpsilonSubstitution EpsilonSubstitution::merged(const EpsilonSubstitution& other) const {
  auto m = std::make_shared<Map>(*map_);
  for (const auto& [e, v] : other) m->insert_or_assign(e, v);
  EpsilonSubstitution s(std::move(m), lazy_);
  s.log_ = log_;
  return s;
}

EpsilonSubstitution EpsilonSubstitution::below(Rank r) const {
  return filter([r](const CanonicalExpression& e, const Value&) { return e.rank() < r; });
}

EpsilonSubstitution EpsilonSubstitution::at_most(Rank r) const {
  return filter([r](const CanonicalExpression& e, const Value&) { return e.rank() <= r; });
}

EpsilonSubstitution EpsilonSubstitution::at_rank(Rank r) const {
  return filter([r](const CanonicalExpression& e, const Value&) { return e.rank() == r; });
}

EpsilonSubstitution EpsilonSubstitution::above(Rank r) const {
  return filter([r](const CanonicalExpression& e, const Value&) { return e.rank() > r; });
}

EpsilonSubstitution EpsilonSubstitution::positive_form_omega() const {
  return filter([](const CanonicalExpression& e, const Value& v) {
    return e.is_formula() && is_positive_omega(e, v);
  });
}

EpsilonSubstitution EpsilonSubstitution::positive_term_omega() const {
  return filter([](const CanonicalExpression& e, const Value& v) {
    return e.is_term() && is_positive_omega(e, v);
  });
}

EpsilonSubstitution EpsilonSubstitution::negative_term_omega() const {
  return filter([](const CanonicalExpression& e, const Value& v) {
    return e.is_term() && is_negative_omega(e, v);
  });
}

EpsilonSubstitution EpsilonSubstitution::negative_form_omega() const {
  return filter([](const CanonicalExpression& e, const Value& v) {
    return e.is_formula() && is_negative_omega(e, v);
  });
}

EpsilonSubstitution EpsilonSubstitution::positive_omega() const {
  return filter(is_positive_omega);
}

EpsilonSubstitution EpsilonSubstitution::negative_omega() const {
  return filter(is_negative_omega);
}

bool EpsilonSubstitution::subset_of(const EpsilonSubstitution& other) const {
  for (const auto& [e, v] : *map_) {
    const Value* w = other.find(e);
    if (w == nullptr || !(*w == v)) return false;
  }
  return true;
}

std::vector<EpsilonSubstitution::Entry> EpsilonSubstitution::sorted_entries() const {
  std::vector<std::pair<std::pair<Rank, std::string>, Entry>> keyed;
  keyed.reserve(map_->size());
  for (const auto& [e, v] : *map_)
    keyed.push_back({{e.rank(), to_string(e.expr())}, Entry{e, v}});
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Entry> out;
  out.reserve(keyed.size());
  for (auto& k : keyed) out.push_back(std::move(k.second));
  return out;
}

std::string EpsilonSubstitution::str() const {
  std::string out = "(";
  bool first = true;
  for (const auto& [e, v] : sorted_entries()) {
    if (!first) out += ' ';
    first = false;
    out += "(" + to_string(e.expr()) + " " + v.str() + ")";
  }
  return out + ")";
}

EpsilonSubstitution parse_substitution(const std::string& text) {
  SExpr s = read_sexpr(text);
  if (!s.is_list) throw SyntaxError("substitution must be a list", s.line, s.col);
  EpsilonSubstitution out;
  for (const auto& item : s.list) {
    if (!item.is_list || item.list.size() != 2 || !item.list[1].is_atom())
      throw SyntaxError("substitution entries are (expression value)", item.line, item.col);
    out = out.with(CanonicalExpression(read_expression(item.list[0])),
                   Value::parse(item.list[1].atom));
  }
  return out;
}

}  // namespace eps
