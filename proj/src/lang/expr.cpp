#include "eps/lang/expr.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace eps {

namespace {

constexpr std::size_t kMix = 0x9e3779b97f4a7c15ULL;

std::size_t mix(std::size_t h, std::size_t v) {
  h ^= v + kMix + (h << 6) + (h >> 2);
  return h;
}

std::size_t hash_natural(const Natural& n) {
  // low 64 bits plus bit length; exact collisions are resolved by compare()
  std::size_t lo = static_cast<std::size_t>(n & Natural(~std::uint64_t{0}));
  std::size_t bits = n.is_zero() ? 0 : boost::multiprecision::msb(n);
  return mix(lo * 0xff51afd7ed558ccdULL, bits);
}

int cmp_natural(const Natural& a, const Natural& b) {
  return a < b ? -1 : (b < a ? 1 : 0);
}

Expression make(Kind kind, std::vector<Expression> kids, Natural n = 0, std::uint32_t v = 0,
                std::shared_ptr<const SkolemSymbol> sym = nullptr) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  std::size_t h = mix(0x1234567, static_cast<std::size_t>(kind));
  if (kind == Kind::Numeral) h = mix(h, hash_natural(n));
  if (kind == Kind::Var) h = mix(h, v);
  if (sym) h = mix(h, sym->hash());
  for (const auto& k : kids) h = mix(h, k.hash());
  node->num = std::move(n);
  node->var = v;
  node->sym = std::move(sym);
  node->kids = std::move(kids);
  node->hash = h;
  return Expression(std::move(node));
}

void require_term(const Expression& e, const char* what) {
  if (e.null() || !e.is_term()) throw ExprError(std::string(what) + ": expected a term");
}

void require_formula(const Expression& e, const char* what) {
  if (e.null() || !e.is_formula()) throw ExprError(std::string(what) + ": expected a formula");
}

std::uint32_t index_level(const Expression& e) {
  std::uint32_t best = 0;
  if (e.kind() == Kind::Skolem) best = e.symbol().level();
  for (const auto& k : e.children()) best = std::max(best, index_level(k));
  return best;
}

}  // namespace

bool is_term_kind(Kind k) {
  switch (k) {
    case Kind::Numeral:
    case Kind::Var:
    case Kind::Succ:
    case Kind::Add:
    case Kind::Mul:
    case Kind::Skolem:
      return true;
    default:
      return false;
  }
}

Kind Expression::kind() const { return node_->kind; }

const Natural& Expression::numeral() const {
  assert(kind() == Kind::Numeral);
  return node_->num;
}

std::uint32_t Expression::var() const {
  assert(kind() == Kind::Var);
  return node_->var;
}

const SkolemSymbol& Expression::symbol() const {
  assert(kind() == Kind::Skolem);
  return *node_->sym;
}

std::span<const Expression> Expression::children() const { return node_->kids; }

std::size_t Expression::hash() const { return node_->hash; }

int compare(const Expression& a, const Expression& b) {
  if (a.node_ == b.node_) return 0;
  if (a.hash() != b.hash()) return a.hash() < b.hash() ? -1 : 1;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case Kind::Numeral:
      if (int c = cmp_natural(a.numeral(), b.numeral())) return c;
      break;
    case Kind::Var:
      if (a.var() != b.var()) return a.var() < b.var() ? -1 : 1;
      break;
    case Kind::Skolem:
      if (int c = compare(a.symbol(), b.symbol())) return c;
      break;
    default:
      break;
  }
  auto ka = a.children();
  auto kb = b.children();
  if (ka.size() != kb.size()) return ka.size() < kb.size() ? -1 : 1;
  for (std::size_t i = 0; i < ka.size(); ++i)
    if (int c = compare(ka[i], kb[i])) return c;
  return 0;
}

bool operator==(const Expression& a, const Expression& b) {
  if (a.node_ == b.node_) return true;
  if (a.null() || b.null()) return false;
  return compare(a, b) == 0;
}

SkolemSymbol::SkolemSymbol(Expression index, std::uint32_t arity, bool clause_witness) {
  require_formula(index, "Skolem index");
  auto d = std::make_shared<Data>();
  d->level = 1 + index_level(index);
  d->mentions_i = eps::mentions_i(index);
  d->hash = mix(mix(index.hash(), arity), clause_witness ? 0xc1a05e : 0x5c01e);
  d->index = std::move(index);
  d->arity = arity;
  d->clause_witness = clause_witness;
  data_ = std::move(d);
}

int compare(const SkolemSymbol& a, const SkolemSymbol& b) {
  if (a.data_ == b.data_) return 0;
  if (a.hash() != b.hash()) return a.hash() < b.hash() ? -1 : 1;
  if (a.clause_witness() != b.clause_witness()) return a.clause_witness() ? 1 : -1;
  if (a.arity() != b.arity()) return a.arity() < b.arity() ? -1 : 1;
  return compare(a.index(), b.index());
}

Expression num(Natural n) {
  if (n < 0) throw ExprError("numerals are natural numbers");
  return make(Kind::Numeral, {}, std::move(n));
}

Expression var(std::uint32_t index) { return make(Kind::Var, {}, 0, index); }

Expression succ(Expression t) {
  require_term(t, "S");
  if (t.is_numeral()) return num(t.numeral() + 1);
  return make(Kind::Succ, {std::move(t)});
}

Expression add(Expression a, Expression b) {
  require_term(a, "+");
  require_term(b, "+");
  return make(Kind::Add, {std::move(a), std::move(b)});
}

Expression mul(Expression a, Expression b) {
  require_term(a, "*");
  require_term(b, "*");
  return make(Kind::Mul, {std::move(a), std::move(b)});
}

Expression skolem(const SkolemSymbol& c, std::vector<Expression> args) {
  if (args.size() != c.arity()) throw ExprError("Skolem term: arity mismatch");
  for (const auto& a : args) require_term(a, "Skolem argument");
  return make(Kind::Skolem, std::move(args), 0, 0, std::make_shared<const SkolemSymbol>(c));
}

Expression eq(Expression a, Expression b) {
  require_term(a, "=");
  require_term(b, "=");
  return make(Kind::Eq, {std::move(a), std::move(b)});
}

Expression lt(Expression a, Expression b) {
  require_term(a, "<");
  require_term(b, "<");
  return make(Kind::Lt, {std::move(a), std::move(b)});
}

Expression in_i(Expression t) {
  require_term(t, "in I");
  return make(Kind::InI, {std::move(t)});
}

Expression neg(Expression f) {
  require_formula(f, "not");
  return make(Kind::Not, {std::move(f)});
}

Expression conj(Expression a, Expression b) {
  require_formula(a, "and");
  require_formula(b, "and");
  return make(Kind::And, {std::move(a), std::move(b)});
}

Expression disj(Expression a, Expression b) {
  require_formula(a, "or");
  require_formula(b, "or");
  return make(Kind::Or, {std::move(a), std::move(b)});
}

Expression implies(Expression a, Expression b) { return disj(neg(std::move(a)), std::move(b)); }

Expression top() {
  static const Expression t = make(Kind::Top, {});
  return t;
}

Expression bottom() {
  static const Expression b = make(Kind::Bottom, {});
  return b;
}

Expression with_children(const Expression& e, std::vector<Expression> kids) {
  switch (e.kind()) {
    case Kind::Numeral:
    case Kind::Var:
    case Kind::Top:
    case Kind::Bottom:
      return e;
    case Kind::Succ:
      return succ(std::move(kids[0]));
    case Kind::Add:
      return add(std::move(kids[0]), std::move(kids[1]));
    case Kind::Mul:
      return mul(std::move(kids[0]), std::move(kids[1]));
    case Kind::Skolem:
      return skolem(e.symbol(), std::move(kids));
    case Kind::Eq:
      return eq(std::move(kids[0]), std::move(kids[1]));
    case Kind::Lt:
      return lt(std::move(kids[0]), std::move(kids[1]));
    case Kind::InI:
      return in_i(std::move(kids[0]));
    case Kind::Not:
      return neg(std::move(kids[0]));
    case Kind::And:
      return conj(std::move(kids[0]), std::move(kids[1]));
    case Kind::Or:
      return disj(std::move(kids[0]), std::move(kids[1]));
  }
  return e;
}

Expression substitute(const Expression& e, std::span<const Expression> values) {
  if (e.kind() == Kind::Var) {
    if (e.var() < values.size() && !values[e.var()].null()) return values[e.var()];
    return e;
  }
  if (e.children().empty()) return e;
  std::vector<Expression> kids;
  kids.reserve(e.children().size());
  bool changed = false;
  for (const auto& k : e.children()) {
    kids.push_back(substitute(k, values));
    changed = changed || kids.back().raw() != k.raw();
  }
  return changed ? with_children(e, std::move(kids)) : e;
}

Expression instantiate(const SkolemSymbol& c, const Expression& value,
                       std::span<const Expression> args) {
  if (args.size() != c.arity()) throw ExprError("instantiate: arity mismatch");
  std::vector<Expression> values;
  values.reserve(args.size() + 1);
  values.push_back(value);
  values.insert(values.end(), args.begin(), args.end());
  return substitute(c.index(), values);
}

bool is_closed(const Expression& e) {
  if (e.kind() == Kind::Var) return false;
  return std::all_of(e.children().begin(), e.children().end(),
                     [](const Expression& k) { return is_closed(k); });
}

bool has_skolem(const Expression& e) {
  if (e.kind() == Kind::Skolem) return true;
  return std::any_of(e.children().begin(), e.children().end(),
                     [](const Expression& k) { return has_skolem(k); });
}

bool mentions_i(const Expression& e) {
  if (e.kind() == Kind::InI) return true;
  if (e.kind() == Kind::Skolem && e.symbol().mentions_i()) return true;
  return std::any_of(e.children().begin(), e.children().end(),
                     [](const Expression& k) { return mentions_i(k); });
}

bool has_i_atom(const Expression& e) {
  if (e.kind() == Kind::InI) return true;
  return std::any_of(e.children().begin(), e.children().end(),
                     [](const Expression& k) { return has_i_atom(k); });
}

std::uint32_t max_var_plus_one(const Expression& e) {
  if (e.kind() == Kind::Var) return e.var() + 1;
  std::uint32_t m = 0;
  for (const auto& k : e.children()) m = std::max(m, max_var_plus_one(k));
  return m;
}

namespace {

void print(std::ostream& os, const Expression& e);

void print_kids(std::ostream& os, const char* head, const Expression& e) {
  os << '(' << head;
  for (const auto& k : e.children()) {
    os << ' ';
    print(os, k);
  }
  os << ')';
}

void print(std::ostream& os, const Expression& e) {
  switch (e.kind()) {
    case Kind::Numeral:
      os << e.numeral();
      return;
    case Kind::Var:
      os << '%' << e.var();
      return;
    case Kind::Succ:
      return print_kids(os, "s", e);
    case Kind::Add:
      return print_kids(os, "+", e);
    case Kind::Mul:
      return print_kids(os, "*", e);
    case Kind::Skolem: {
      const auto& c = e.symbol();
      if (c.clause_witness()) {
        os << "(cI ";
      } else {
        os << "(c " << c.arity() << ' ';
      }
      print(os, c.index());
      for (const auto& k : e.children()) {
        os << ' ';
        print(os, k);
      }
      os << ')';
      return;
    }
    case Kind::Eq:
      return print_kids(os, "=", e);
    case Kind::Lt:
      return print_kids(os, "<", e);
    case Kind::InI:
      os << "(in ";
      print(os, e.child(0));
      os << " I)";
      return;
    case Kind::Not:
      return print_kids(os, "not", e);
    case Kind::And:
      return print_kids(os, "and", e);
    case Kind::Or:
      return print_kids(os, "or", e);
    case Kind::Top:
      os << "top";
      return;
    case Kind::Bottom:
      os << "bot";
      return;
  }
}

}  // namespace

std::string to_string(const Expression& e) {
  if (e.null()) return "<null>";
  std::ostringstream os;
  print(os, e);
  return os.str();
}

std::string to_string(const SkolemSymbol& c) {
  std::ostringstream os;
  os << (c.clause_witness() ? "cI" : "c") << '[' << c.arity() << "]{" << to_string(c.index())
     << '}';
  return os.str();
}

}  // namespace eps
