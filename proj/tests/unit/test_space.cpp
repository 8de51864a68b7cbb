#include "doctest.h"
#include "ordertop/errors.hpp"
#include "ordertop/space.hpp"

using namespace ordertop;

namespace {

Bits of(std::size_t n, std::initializer_list<std::size_t> xs) {
  Bits b(n);
  for (auto x : xs) b.set(x);
  return b;
}

FinitePoset diamond() {
  return FinitePoset::from_covers({"b", "x", "y", "t"},
                                  {{"b", "x"}, {"b", "y"}, {"x", "t"}, {"y", "t"}});
}

FiniteSpace sierpinski() {
  return FiniteSpace::from_closed_family({"a", "b"},
                                         {of(2, {}), of(2, {0}), of(2, {0, 1})});
}

}  // namespace

TEST_CASE("scott space closed-set counts") {
  CHECK(FiniteSpace::scott_space(FinitePoset::chain(2)).closed_sets().size() == 3);
  CHECK(FiniteSpace::scott_space(FinitePoset::antichain(2)).closed_sets().size() == 4);
  auto d = FiniteSpace::scott_space(diamond());
  CHECK(d.closed_sets().size() == 6);
  // exact family: empty, {b}, {b,x}, {b,y}, {b,x,y}, all
  CHECK(d.is_closed(of(4, {})));
  CHECK(d.is_closed(of(4, {0})));
  CHECK(d.is_closed(of(4, {0, 1})));
  CHECK(d.is_closed(of(4, {0, 2})));
  CHECK(d.is_closed(of(4, {0, 1, 2})));
  CHECK(d.is_closed(of(4, {0, 1, 2, 3})));
  CHECK_FALSE(d.is_closed(of(4, {1})));
  CHECK_FALSE(d.is_closed(of(4, {0, 3})));
}

TEST_CASE("closed family validation") {
  CHECK_NOTHROW(FiniteSpace::from_closed_family({"a"}, {of(1, {}), of(1, {0})}));
  CHECK_NOTHROW(sierpinski());
  // indiscrete pair: family axioms fine, T0 fails
  CHECK_THROWS_AS(FiniteSpace::from_closed_family({"a", "b"}, {of(2, {}), of(2, {0, 1})}),
                  NotT0);
  // missing empty set
  CHECK_THROWS_AS(FiniteSpace::from_closed_family({"a"}, {of(1, {0})}), NotAFamily);
  // missing a union
  CHECK_THROWS_AS(
      FiniteSpace::from_closed_family(
          {"a", "b", "c"}, {of(3, {}), of(3, {0}), of(3, {1}), of(3, {0, 1, 2})}),
      NotAFamily);
}

TEST_CASE("specialization order") {
  auto s = sierpinski();
  const auto& p = s.specialization();
  CHECK(p.leq(p.index_of("a"), p.index_of("b")));
  CHECK_FALSE(p.leq(p.index_of("b"), p.index_of("a")));

  auto discrete = FiniteSpace::from_closed_family(
      {"a", "b"}, {of(2, {}), of(2, {0}), of(2, {1}), of(2, {0, 1})});
  CHECK(discrete.specialization().cover_pairs().empty());

  // round trip: the scott space's specialization is the original order
  for (const auto& q : {diamond(), FinitePoset::chain(4), FinitePoset::antichain(3)})
    CHECK(FiniteSpace::scott_space(q).specialization().same_relation(q));
}

TEST_CASE("closure is a closure operator") {
  auto d = FiniteSpace::scott_space(diamond());
  auto x = Bits::single(4, 1);
  CHECK(d.closure(x) == of(4, {0, 1}));
  CHECK(d.closure(of(4, {})) == of(4, {}));
  CHECK(x.subset_of(d.closure(x)));                       // extensive
  CHECK(d.closure(d.closure(x)) == d.closure(x));         // idempotent
  CHECK(d.closure(x).subset_of(d.closure(of(4, {1, 2}))));  // monotone
  // every closed set is a lower set of the specialization order
  for (const auto& c : d.closed_sets()) CHECK(d.specialization().is_lower_set(c));
}

TEST_CASE("space classification") {
  for (const auto& p : {diamond(), FinitePoset::chain(3), FinitePoset::antichain(3)}) {
    auto t = classify_space(FiniteSpace::scott_space(p));
    CHECK(t.is_t0);
    CHECK(t.is_td);
    CHECK(t.is_d_space);
    CHECK(t.directed_sets_checked > 0);
  }
  // non-T0 family: reported rather than thrown
  auto t = classify_closed_family(2, {of(2, {}), of(2, {0, 1})});
  CHECK_FALSE(t.is_t0);
  CHECK_FALSE(t.is_td);
  CHECK_FALSE(t.is_d_space);
}
