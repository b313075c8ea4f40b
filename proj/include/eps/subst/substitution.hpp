#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eps/lang/expr.hpp"
#include "eps/lang/rank.hpp"

namespace eps {

// A Skolem term whose arguments are all numerals, or an atom n in I.
class CanonicalExpression {
 public:
  explicit CanonicalExpression(Expression e);
  static bool is_canonical(const Expression& e);

  const Expression& expr() const { return e_; }
  bool is_term() const { return e_.kind() == Kind::Skolem; }
  bool is_formula() const { return e_.kind() == Kind::InI; }
  Rank rank() const { return eps::rank(e_); }
  // c_n for the clause witness
  bool is_clause_witness() const { return is_term() && e_.symbol().clause_witness(); }
  // n for c_n or for n in I
  const Natural& numeral_arg() const;
  std::vector<Expression> args() const;

  friend bool operator==(const CanonicalExpression&, const CanonicalExpression&) = default;
  friend bool operator<(const CanonicalExpression& a, const CanonicalExpression& b) {
    return a.e_ < b.e_;
  }

 private:
  Expression e_;
};

CanonicalExpression canon_form(Natural n);  // n in I

class Value {
 public:
  enum class Tag : std::uint8_t { Num, Top, Unknown };

  static Value number(Natural n) { return Value(Tag::Num, std::move(n)); }
  static Value top() { return Value(Tag::Top, 0); }
  static Value unknown() { return Value(Tag::Unknown, 0); }

  Tag tag() const { return tag_; }
  bool is_num() const { return tag_ == Tag::Num; }
  bool is_top() const { return tag_ == Tag::Top; }
  bool is_unknown() const { return tag_ == Tag::Unknown; }
  const Natural& n() const { return n_; }

  friend bool operator==(const Value&, const Value&) = default;
  std::string str() const;  // "?", "top" or the decimal numeral
  static Value parse(const std::string& s);

 private:
  Value(Tag t, Natural n) : tag_(t), n_(std::move(n)) {}
  Tag tag_;
  Natural n_;
};

class SubstitutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a canonical term would be assigned the numeral 0.
class ZeroValueError : public SubstitutionError {
 public:
  using SubstitutionError::SubstitutionError;
};

// Observes lookups made through a recording substitution.
struct LookupLog {
  std::mutex mu;
  std::vector<CanonicalExpression> keys;
  void add(const CanonicalExpression& e) {
    std::lock_guard<std::mutex> lock(mu);
    keys.push_back(e);
  }
};

// A finite map from canonical expressions to values. Copies share storage;
// every update returns a new substitution. With the lazy flag set, lookups
// outside the domain answer Unknown, which realizes the standard extension.
class EpsilonSubstitution {
 public:
  using Map = std::map<CanonicalExpression, Value>;
  using Entry = std::pair<CanonicalExpression, Value>;

  EpsilonSubstitution();

  bool lazy() const { return lazy_; }
  EpsilonSubstitution extended() const;  // the standard extension
  EpsilonSubstitution strict() const;
  EpsilonSubstitution recording(std::shared_ptr<LookupLog> log) const;

  // Value seen by reduction: the stored value, Unknown when lazy and absent,
  // nullopt otherwise.
  std::optional<Value> lookup(const CanonicalExpression& e) const;
  const Value* find(const CanonicalExpression& e) const;
  bool contains(const CanonicalExpression& e) const { return find(e) != nullptr; }

  EpsilonSubstitution with(const CanonicalExpression& e, const Value& v) const;
  EpsilonSubstitution without(const CanonicalExpression& e) const;
  EpsilonSubstitution filter(const std::function<bool(const CanonicalExpression&, const Value&)>& keep) const;
  // Union; entries of `other` win on conflicts.
  EpsilonSubstitution merged(const EpsilonSubstitution& other) const;

  std::size_t size() const { return map_->size(); }
  bool empty() const { return map_->empty(); }
  Map::const_iterator begin() const { return map_->begin(); }
  Map::const_iterator end() const { return map_->end(); }

  // Rank filters S_{<r}, S_{<=r}, S_{=r}, S_{>r}.
  EpsilonSubstitution below(Rank r) const;
  EpsilonSubstitution at_most(Rank r) const;
  EpsilonSubstitution at_rank(Rank r) const;
  EpsilonSubstitution above(Rank r) const;

  // Rank-Omega partitions. Positive: (n in I, top) and (c_n, ?).
  // Negative: (c_n, numeral) and (n in I, ?).
  EpsilonSubstitution positive_form_omega() const;
  EpsilonSubstitution positive_term_omega() const;
  EpsilonSubstitution negative_term_omega() const;
  EpsilonSubstitution negative_form_omega() const;
  EpsilonSubstitution positive_omega() const;
  EpsilonSubstitution negative_omega() const;

  bool subset_of(const EpsilonSubstitution& other) const;

  // Entries ordered by rank, then by serialization.
  std::vector<Entry> sorted_entries() const;
  std::string str() const;

  friend bool operator==(const EpsilonSubstitution& a, const EpsilonSubstitution& b) {
    return a.map_ == b.map_ || *a.map_ == *b.map_;
  }

 private:
  explicit EpsilonSubstitution(std::shared_ptr<const Map> m, bool lazy = false)
      : map_(std::move(m)), lazy_(lazy) {}

  std::shared_ptr<const Map> map_;
  bool lazy_ = false;
  std::shared_ptr<LookupLog> log_;
};

// Positive rank-Omega entry: (n in I, top) or (c_n, ?).
bool is_positive_omega(const CanonicalExpression& e, const Value& v);
// Negative rank-Omega entry: (c_n, numeral) or (n in I, ?).
bool is_negative_omega(const CanonicalExpression& e, const Value& v);

// Parses the form written by EpsilonSubstitution::str().
EpsilonSubstitution parse_substitution(const std::string& text);

}  // namespace eps
