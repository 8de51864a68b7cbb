#include "doctest.h"
#include "ordertop/errors.hpp"
#include "ordertop/kou.hpp"

using namespace ordertop;

namespace {
Rational q(const char* s) { return parse_rational(s); }
}  // namespace

TEST_CASE("rational parsing") {
  CHECK(q("3/4") == Rational(3, 4));
  CHECK(q("2") == Rational(2));
  CHECK(q("6/8") == Rational(3, 4));
  CHECK(q("-1/2") == Rational(-1, 2));
  CHECK_THROWS_AS(parse_rational("0.5"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("a/b"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("3/"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("/4"), InvalidInput);
  CHECK_THROWS_AS(parse_rational(""), InvalidInput);
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
  CHECK(rational_string(q("6/8")) == "3/4");
  CHECK(parse_rational(rational_string(Rational(7, 13))) == Rational(7, 13));
}

TEST_CASE("element validation") {
  CHECK_NOTHROW(kou_point(q("1")));
  CHECK_NOTHROW(kou_point(q("1/1000")));
  CHECK_THROWS_AS(kou_point(q("0")), InvalidElement);
  CHECK_THROWS_AS(kou_point(q("5/4")), InvalidElement);
  CHECK_NOTHROW(kou_triple(q("1/2"), q("1"), q("1")));
  CHECK_THROWS_AS(kou_triple(q("1"), q("1"), q("1")), InvalidElement);   // k < 1
  CHECK_THROWS_AS(kou_triple(q("0"), q("1"), q("1")), InvalidElement);   // k > 0
  CHECK_THROWS_AS(kou_triple(q("1/2"), q("1/2"), q("3/4")), InvalidElement);  // b <= a
  CHECK(kou_label(kou_triple(q("1/2"), q("1"), q("3/4"))) == "(1/2,1,3/4)");
  CHECK(kou_label(kou_point(q("2/3"))) == "2/3");
}

TEST_CASE("order clauses") {
  auto t = [](const char* k, const char* a, const char* b) {
    return kou_triple(q(k), q(a), q(b));
  };
  CHECK(kou_leq(t("1/2", "1", "1"), t("3/4", "1", "1")));
  CHECK_FALSE(kou_leq(t("3/4", "1", "1"), t("1/2", "1", "1")));
  CHECK_FALSE(kou_leq(t("1/2", "1", "1"), t("3/4", "1", "3/4")));  // b differs
  CHECK(kou_leq(t("1/2", "1", "1"), kou_point(q("3/4"))));  // kb = 1/2 <= 3/4 < 1
  CHECK(kou_leq(t("1/2", "3/4", "1/2"), kou_point(q("3/4"))));  // a = x clause
  CHECK_FALSE(kou_leq(kou_point(q("1/2")), kou_point(q("3/4"))));
  CHECK(kou_leq(kou_point(q("1/2")), kou_point(q("1/2"))));
  CHECK_FALSE(kou_leq(kou_point(q("1")), t("1/2", "1", "1")));  // never point <= triple

  // boundary arithmetic is exact: kb = x passes, one thousandth less fails
  CHECK(kou_leq(t("1/3", "3/10", "3/10"), kou_point(q("1/10"))));
  CHECK_FALSE(kou_leq(t("1/3", "3/10", "3/10"), kou_point(q("99/1000"))));
  // x < b is strict
  CHECK_FALSE(kou_leq(t("1/2", "1", "3/4"), kou_point(q("3/4"))));
}

TEST_CASE("down sets and upper bounds") {
  auto target = kou_triple(q("1/2"), q("1/2"), q("1/4"));
  CHECK(kou_leq(kou_triple(q("1/4"), q("1/2"), q("1/4")), target));
  CHECK(kou_leq(kou_triple(q("1/2"), q("1/2"), q("1/4")), target));
  CHECK_FALSE(kou_leq(kou_triple(q("3/4"), q("1/2"), q("1/4")), target));
  CHECK_FALSE(kou_leq(kou_point(q("1/2")), target));

  // ub{(k,1/3,1/3)} = {1/3}: membership independent of k, refutations exact
  for (const char* k : {"1/10", "1/2", "9/10"})
    CHECK(kou_leq(kou_triple(q(k), q("1/3"), q("1/3")), kou_point(q("1/3"))));
  CHECK_FALSE(kou_leq(kou_triple(q("7/8"), q("1/3"), q("1/3")), kou_point(q("1/4"))));
  CHECK_FALSE(kou_leq(kou_triple(q("1/2"), q("1/3"), q("1/3")), kou_point(q("1/2"))));
  CHECK_FALSE(
      kou_leq(kou_triple(q("15/16"), q("1/3"), q("1/3")), kou_triple(q("7/8"), q("1/3"), q("1/3"))));
}

TEST_CASE("claims and axiom sampling") {
  CHECK_THROWS_AS(kou_claims(42, 0), InvalidInput);
  auto r = kou_claims(42, 2000);
  CHECK(r.down_sets_are_chains);
  CHECK(r.upper_bounds_single_point);
  CHECK(r.ladder_independent_of_k);
  CHECK(r.axioms.violations == 0);
  CHECK(r.passed());
  CHECK(r.cases_checked > 0);

  CHECK_THROWS_AS(kou_axioms_sample(7, 0), InvalidInput);
  auto rep = kou_axioms_sample(7, 10000);
  CHECK(rep.trials == 10000);
  CHECK(rep.violations == 0);
}
