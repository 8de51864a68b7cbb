#include "doctest.h"
#include "ordertop/errors.hpp"
#include "ordertop/verify.hpp"

using namespace ordertop;

TEST_CASE("suite names") {
  CHECK(verification_suites().size() == 8);
  CHECK_THROWS_AS(verify("nonsense", 3), UnknownSuite);
  CHECK_THROWS_AS(verify("kappa", 0), SizeLimit);
  CHECK_THROWS_AS(verify("kappa", 9), SizeLimit);
}

TEST_CASE("uniqueness at four elements") {
  auto r = verify("uniqueness", 4);
  CHECK(r.passed());
  // pooled pairs over sizes 1..4 (24 posets), of which the 16 four-element
  // classes contribute 16*17/2 = 136 within-size pairs
  CHECK(r.checked == 300);
  REQUIRE(r.slices.size() == 4);
  CHECK(r.slices[3].n == 4);
  CHECK(r.slices[3].checked == 136);
  CHECK(r.slices[2].checked == 15);
}

TEST_CASE("kappa at five elements") {
  auto r = verify("kappa", 5);
  CHECK(r.passed());
  CHECK(r.checked == 87);  // 1+2+5+16+63
}

TEST_CASE("fact2 at four elements") {
  auto r = verify("fact2", 4);
  CHECK(r.passed());
  CHECK(r.checked == 24);
}

TEST_CASE("quasicontinuity and restriction at four elements") {
  CHECK(verify("quasicontinuity", 4).passed());
  CHECK(verify("restriction", 4).passed());
}

TEST_CASE("top extension at four elements") {
  auto r = verify("top-extension", 4);
  CHECK(r.passed());
  CHECK(r.checked == 24);
}

TEST_CASE("sobriety counts spaces per size") {
  auto r = verify("sobriety", 4);
  CHECK(r.passed());
  REQUIRE(r.slices.size() == 4);
  CHECK(r.slices[3].checked == 16);
  auto one = verify("sobriety", 1);
  CHECK(one.passed());
  CHECK(one.checked == 1);
}

TEST_CASE("worker count does not change the report") {
  auto a = verify("kappa", 4, 1);
  auto b = verify("kappa", 4, 4);
  CHECK(a.checked == b.checked);
  CHECK(a.failures.size() == b.failures.size());
  REQUIRE(a.slices.size() == b.slices.size());
  for (std::size_t i = 0; i < a.slices.size(); ++i)
    CHECK(a.slices[i].checked == b.slices[i].checked);

  auto u1 = verify("uniqueness", 3, 1);
  auto u2 = verify("uniqueness", 3, 3);
  CHECK(u1.checked == u2.checked);
  CHECK(u1.passed() == u2.passed());
}

TEST_CASE("aggregate suite") {
  auto r = verify("all", 3);
  CHECK(r.passed());
  CHECK(r.notes.size() == 7);
  // 7 suites over 8 classes; uniqueness counts pairs (36), the rest posets
  CHECK(r.checked == 36 + 6 * 8);
}
