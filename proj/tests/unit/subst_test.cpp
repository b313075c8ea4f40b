#include <doctest.h>

#include "eps/lang/clause.hpp"
#include "eps/subst/reduce.hpp"
#include "eps/subst/substitution.hpp"
#include "oracle.hpp"

using namespace eps;

namespace {

SkolemSymbol succ_symbol() { return SkolemSymbol(eq(var(0), succ(var(1))), 1); }
CanonicalExpression c_of(const SkolemSymbol& c, int n) { return CanonicalExpression(skolem(c, {num(n)})); }
InductiveClause all_below() { return InductiveClause(disj(neg(lt(var(0), var(1))), in_i(var(0)))); }

EpsilonSubstitution empty_ext() { return EpsilonSubstitution().extended(); }

}  // namespace

TEST_CASE("reduce_term computes PA and reads canonical terms through S") {
  CHECK(reduce_term(add(num(1), num(1)), EpsilonSubstitution()) == num(2));
  CHECK(reduce_term(mul(num(3), add(num(1), num(1))), EpsilonSubstitution()) == num(6));

  SkolemSymbol c = succ_symbol();
  auto key = c_of(c, 0);
  EpsilonSubstitution s = EpsilonSubstitution().with(key, Value::number(2));
  // c + S0
  CHECK(reduce_term(add(key.expr(), succ(num(0))), s) == num(3));
  // absent without extension: unchanged
  CHECK(reduce_term(key.expr(), EpsilonSubstitution()) == key.expr());
  // ? reads as 0
  CHECK(reduce_term(key.expr(), EpsilonSubstitution().with(key, Value::unknown())) == num(0));
  CHECK(reduce_term(key.expr(), empty_ext()) == num(0));
}

TEST_CASE("reduce_term reduces arguments of non-canonical Skolem terms first") {
  SkolemSymbol c = succ_symbol();
  SkolemSymbol d(in_i(var(0)), 0);  // c_{exists x. x in I}, rank above Omega
  Expression dt = skolem(d, {});
  Expression cd = skolem(c, {dt});
  // S(d) = ?, so c(d) becomes c(0)
  EpsilonSubstitution s = EpsilonSubstitution().with(CanonicalExpression(dt), Value::unknown());
  CHECK(reduce_term(cd, s) == skolem(c, {num(0)}));
  CHECK(reduce_term(cd, s.with(c_of(c, 0), Value::number(4))) == num(4));
}

TEST_CASE("reduce_term reaches a fixed point") {
  SkolemSymbol c = succ_symbol();
  Expression t = add(skolem(c, {skolem(c, {num(1)})}), num(2));
  EpsilonSubstitution s = EpsilonSubstitution().with(c_of(c, 1), Value::number(2));
  Expression r = reduce_term(t, s);
  CHECK(reduce_term(r, s) == r);
  CHECK(r == add(skolem(c, {num(2)}), num(2)));
}

TEST_CASE("reduce_formula on membership atoms") {
  CHECK(reduce_formula(in_i(num(0)), empty_ext()) == bottom());
  CHECK(reduce_formula(in_i(num(0)), EpsilonSubstitution()) == in_i(num(0)));
  Expression f = neg(eq(num(0), num(0)));
  CHECK(reduce_formula(f, EpsilonSubstitution()) == f);
  EpsilonSubstitution s = EpsilonSubstitution().with(canon_form(1), Value::top());
  CHECK(reduce_formula(disj(in_i(num(1)), eq(num(0), num(0))), s) ==
        disj(top(), eq(num(0), num(0))));
}

TEST_CASE("models and decides") {
  CHECK(models(empty_ext(), eq(succ(num(0)), succ(num(0)))));
  CHECK_FALSE(models(empty_ext(), in_i(num(0))));
  CHECK(models(empty_ext(), neg(in_i(num(0)))));
  // without extension neither direction holds
  CHECK_FALSE(models(EpsilonSubstitution(), in_i(num(0))));
  CHECK_FALSE(models(EpsilonSubstitution(), neg(in_i(num(0)))));
  CHECK_FALSE(decides(EpsilonSubstitution(), in_i(num(0))));
  CHECK(decides(empty_ext(), in_i(num(0))));
  CHECK(decides(EpsilonSubstitution(), eq(num(0), num(0))));
  SkolemSymbol c = succ_symbol();
  CHECK(decides(empty_ext(), lt(skolem(c, {num(3)}), num(2))));
}

TEST_CASE("correctness formula F(e, u)") {
  InductiveClause b = all_below();
  SkolemSymbol c = succ_symbol();
  auto e = c_of(c, 2);
  CHECK(correctness_formula(e, Value::unknown(), b) == top());
  CHECK(correctness_formula(canon_form(3), Value::top(), b) == b.a_formula(num(3)));
  // x = S2 holds at 3 and at no smaller x
  CHECK(models(empty_ext(), correctness_formula(e, Value::number(3), b)));
  CHECK_FALSE(models(empty_ext(), correctness_formula(e, Value::number(1), b)));
  for (int u = 1; u <= 5; ++u)
    CHECK(models(empty_ext(), correctness_formula(e, Value::number(u), b)) ==
          oracle::entry_correct(e, Value::number(u), empty_ext(), b));
  CHECK_THROWS(correctness_formula(e, Value::top(), b));
}

TEST_CASE("correct, cc and ci") {
  InductiveClause b = all_below();
  CHECK(is_correct(EpsilonSubstitution(), b));
  CHECK(is_cc(EpsilonSubstitution(), b));

  CanonicalExpression c1(b.witness_term(num(1)));
  EpsilonSubstitution ci =
      EpsilonSubstitution().with(c1, Value::number(1)).with(canon_form(1), Value::top());
  CHECK(is_ci(ci, b));

  // A(3, I) = not c_3 < 3 or c_3 in I fails with c_3 read as 0 and 0 not in I
  EpsilonSubstitution three = EpsilonSubstitution().with(canon_form(3), Value::top());
  CHECK(is_correct(three, b) == oracle::eval_formula(b.a_formula(num(3)), three.extended()));
  CHECK_FALSE(is_correct(three, b));
  REQUIRE(incorrect_entries(three, b).size() == 1);
  CHECK(incorrect_entries(three, b)[0] == canon_form(3));

  // with 0, 1, 2 in I it becomes correct
  EpsilonSubstitution chain = three;
  for (int n = 0; n < 3; ++n) chain = chain.with(canon_form(n), Value::top());
  CHECK(is_correct(chain, b));
  // A(n, I) consults c_n, which the strict S does not contain
  CHECK_FALSE(is_computing(chain, b));
  for (int n = 0; n <= 3; ++n) chain = chain.with(CanonicalExpression(b.witness_term(num(n))), Value::unknown());
  CHECK(is_correct(chain, b));
  CHECK(is_computing(chain, b));
  CHECK_FALSE(is_computing(ci, b));
}

TEST_CASE("canonical terms never store 0") {
  SkolemSymbol c = succ_symbol();
  CHECK_THROWS_AS(EpsilonSubstitution().with(c_of(c, 1), Value::number(0)), ZeroValueError);
  CHECK_THROWS(EpsilonSubstitution().with(canon_form(1), Value::number(2)));
  CHECK_THROWS(EpsilonSubstitution().with(c_of(c, 1), Value::top()));
}

TEST_CASE("rank filters and Omega partitions") {
  InductiveClause b = all_below();
  SkolemSymbol c = succ_symbol();
  CanonicalExpression c2(b.witness_term(num(2)));
  CanonicalExpression c5(b.witness_term(num(5)));
  EpsilonSubstitution s = EpsilonSubstitution()
                              .with(c_of(c, 0), Value::number(1))
                              .with(canon_form(0), Value::top())
                              .with(canon_form(4), Value::unknown())
                              .with(c2, Value::unknown())
                              .with(c5, Value::number(3));
  CHECK(s.below(Rank::omega()).size() == 1);
  CHECK(s.at_rank(Rank::omega()).size() == 4);
  CHECK(s.above(Rank::omega()).empty());
  CHECK(s.positive_omega().size() == 2);
  CHECK(s.positive_form_omega().size() == 1);
  CHECK(s.positive_term_omega().contains(c2));
  CHECK(s.negative_omega().size() == 2);
  CHECK(s.negative_term_omega().contains(c5));
  CHECK(s.negative_form_omega().contains(canon_form(4)));
  CHECK(is_positive_omega(canon_form(0), Value::top()));
  CHECK(is_negative_omega(canon_form(0), Value::unknown()));
  CHECK(s.positive_omega().merged(s.negative_omega()).merged(s.below(Rank::omega())) == s);
}

TEST_CASE("substitution updates are persistent") {
  SkolemSymbol c = succ_symbol();
  EpsilonSubstitution a = EpsilonSubstitution().with(c_of(c, 0), Value::number(1));
  EpsilonSubstitution b2 = a.with(c_of(c, 1), Value::number(2));
  CHECK(a.size() == 1);
  CHECK(b2.size() == 2);
  CHECK(a.subset_of(b2));
  CHECK_FALSE(b2.subset_of(a));
  CHECK(b2.without(c_of(c, 1)) == a);
  EpsilonSubstitution merged = a.merged(EpsilonSubstitution().with(c_of(c, 0), Value::unknown()));
  CHECK(*merged.find(c_of(c, 0)) == Value::unknown());
}

TEST_CASE("substitution text round trip") {
  InductiveClause b = all_below();
  SkolemSymbol c = succ_symbol();
  EpsilonSubstitution s = EpsilonSubstitution()
                              .with(c_of(c, 7), Value::number(8))
                              .with(canon_form(2), Value::top())
                              .with(CanonicalExpression(b.witness_term(num(2))), Value::unknown());
  CHECK(parse_substitution(s.str()) == s);
  CHECK(parse_substitution(EpsilonSubstitution().str()) == EpsilonSubstitution());
  CHECK(Value::parse("top") == Value::top());
  CHECK(Value::parse("?") == Value::unknown());
  CHECK(Value::parse("12").n() == 12);
}

TEST_CASE("recording substitution logs consulted keys") {
  SkolemSymbol c = succ_symbol();
  auto log = std::make_shared<LookupLog>();
  EpsilonSubstitution rec = empty_ext().recording(log);
  reduce_formula(conj(in_i(num(2)), eq(skolem(c, {num(1)}), num(0))), rec);
  REQUIRE(log->keys.size() == 2);
  CHECK(std::count(log->keys.begin(), log->keys.end(), canon_form(2)) == 1);
  CHECK(std::count(log->keys.begin(), log->keys.end(), c_of(c, 1)) == 1);
}
