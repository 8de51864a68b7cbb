#include "doctest.h"
#include "ordertop/errors.hpp"
#include "ordertop/johnstone.hpp"

using namespace ordertop;

namespace {
JohnstoneElement je(std::uint64_t m, std::uint64_t n) {
  return johnstone_element(m, NatOrInf::nat(n));
}
JohnstoneElement jinf(std::uint64_t m) {
  return johnstone_element(m, NatOrInf::inf());
}
}  // namespace

TEST_CASE("element validation and labels") {
  CHECK_THROWS_AS(johnstone_element(0, NatOrInf::nat(1)), InvalidElement);
  CHECK_THROWS_AS(johnstone_element(1, NatOrInf::nat(0)), InvalidElement);
  CHECK_THROWS_AS(NatOrInf::inf().value(), InvalidElement);
  CHECK(johnstone_label(je(3, 4)) == "(3,4)");
  CHECK(johnstone_label(jinf(2)) == "(2,inf)");
}

TEST_CASE("order clauses") {
  CHECK(johnstone_leq(je(1, 2), je(1, 5)));
  CHECK_FALSE(johnstone_leq(je(1, 5), je(1, 2)));
  CHECK(johnstone_leq(je(1, 2), jinf(3)));   // second clause: 2 <= 3
  CHECK_FALSE(johnstone_leq(je(1, 4), jinf(3)));
  CHECK_FALSE(johnstone_leq(jinf(1), jinf(2)));  // ∞ never <= a natural
  CHECK(johnstone_leq(jinf(2), jinf(2)));
  CHECK(johnstone_leq(je(2, 7), jinf(2)));   // first clause with n' = ∞
  CHECK_FALSE(johnstone_leq(jinf(1), je(1, 5)));
  CHECK_FALSE(johnstone_leq(je(1, 1), je(2, 1)));
}

TEST_CASE("truncations") {
  auto t11 = johnstone_truncate(1, 1);
  CHECK(t11.size() == 2);
  CHECK(t11.leq(t11.index_of("(1,1)"), t11.index_of("(1,inf)")));

  auto t22 = johnstone_truncate(2, 2);
  CHECK(t22.size() == 6);
  CHECK(t22.leq(t22.index_of("(1,1)"), t22.index_of("(2,inf)")));
  CHECK_FALSE(t22.leq(t22.index_of("(2,2)"), t22.index_of("(1,inf)")));

  // the truncation order is the restriction of the symbolic order
  auto t34 = johnstone_truncate(3, 4);
  for (const auto& a : t22.labels())
    for (const auto& b : t22.labels())
      CHECK(t22.leq(t22.index_of(a), t22.index_of(b)) ==
            t34.leq(t34.index_of(a), t34.index_of(b)));

  CHECK_THROWS_AS(johnstone_truncate(0, 3), InvalidInput);
  CHECK_THROWS_AS(johnstone_truncate(3, 0), InvalidInput);
  CHECK_THROWS_AS(johnstone_truncate(1000, 1000), SizeLimit);
}

TEST_CASE("structural claims") {
  auto r = johnstone_claims(5, 5);
  CHECK(r.down_sets_of_finite_levels_are_chains);
  CHECK(r.column_upper_bounds_single_infinity);
  CHECK(r.infinity_ideals_never_down_linear);
  CHECK(r.truncation_finite_levels_down_linear);
  CHECK(r.truncation_infinity_chain_iff_width_one);
  CHECK(r.passed());
  CHECK(r.cases_checked > 0);

  // a single-column truncation is the only one whose ∞ ideals stay chains
  CHECK(johnstone_claims(1, 4).passed());
  CHECK(johnstone_claims(2, 3).passed());
}

TEST_CASE("axiom sampling") {
  CHECK_THROWS_AS(johnstone_axioms_sample(42, 0), InvalidInput);
  auto rep = johnstone_axioms_sample(42, 10000);
  CHECK(rep.trials == 10000);
  CHECK(rep.violations == 0);
  CHECK(rep.passed());
}
